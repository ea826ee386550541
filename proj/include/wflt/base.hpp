// base.hpp -- shared symbol/string types and parse diagnostics
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wflt {

// Terminal symbols and automaton labels are interned as plain strings.
using Symbol = std::string;

// A string over the alphabet: a sequence of whole tokens, not characters.
using TokenString = std::vector<Symbol>;

// Reserved token for the empty string in file formats and triplet names.
inline constexpr std::string_view kEpsilonToken = "<eps>";
inline constexpr std::string_view kSBarToken = "<sbar>";

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits on ASCII whitespace, dropping empty fields.
std::vector<std::string> split_tokens(std::string_view line);

// Joins tokens with single spaces ("" for the empty string).
std::string join_tokens(const TokenString& tokens);

}  // namespace wflt
