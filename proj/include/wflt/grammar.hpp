// grammar.hpp -- weighted CFGs and rule-labeled derivation trees
#pragma once

#include "wflt/base.hpp"
#include "wflt/semiring.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace wflt {

using NonterminalId = int;
using RuleId = int;

struct RhsSymbol {
  bool is_nonterminal = false;
  NonterminalId nonterminal = -1;  // valid when is_nonterminal
  Symbol terminal;                 // valid otherwise

  static RhsSymbol nt(NonterminalId id) { return {true, id, {}}; }
  static RhsSymbol term(Symbol s) { return {false, -1, std::move(s)}; }
  friend bool operator==(const RhsSymbol&, const RhsSymbol&) = default;
};

// X -> alpha / w. An empty rhs encodes X -> epsilon.
struct Rule {
  RuleId id = -1;
  NonterminalId lhs = -1;
  std::vector<RhsSymbol> rhs;
  Weight weight;
};

struct Wcfg {
  SemiringId semiring = SemiringId::Real;
  std::vector<std::string> nonterminal_names;
  std::map<std::string, NonterminalId> nonterminal_ids;
  std::set<Symbol> alphabet;
  NonterminalId start = -1;
  std::vector<Rule> rules;

  explicit Wcfg(SemiringId sr = SemiringId::Real) : semiring(sr) {}

  NonterminalId add_nonterminal(const std::string& name);
  NonterminalId nonterminal(const std::string& name) const;  // throws on unknown

  // Registers terminal rhs symbols in the alphabet; rejects zero weights
  // and nonterminal/terminal name clashes.
  RuleId add_rule(NonterminalId lhs, std::vector<RhsSymbol> rhs, const Weight& w);
};

// An ordered tree. Internal nodes carry RuleIds; leaves are terminals or
// epsilon. A rule node's children mirror its rhs positionally; an
// epsilon-rule node has one epsilon leaf. Bare leaves are the size-0
// subderivations (weight 1).
struct Derivation {
  enum class Kind { Rule, Terminal, Epsilon };
  Kind kind = Kind::Epsilon;
  RuleId rule = -1;
  Symbol terminal;
  std::vector<Derivation> children;

  static Derivation eps() { return {}; }
  static Derivation leaf(Symbol s) {
    Derivation d;
    d.kind = Kind::Terminal;
    d.terminal = std::move(s);
    return d;
  }
  static Derivation node(RuleId r, std::vector<Derivation> ch) {
    Derivation d;
    d.kind = Kind::Rule;
    d.rule = r;
    d.children = std::move(ch);
    return d;
  }
  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Throws std::invalid_argument if the tree does not match the grammar;
// `root` restricts the root rule's lhs when given.
void check_derivation(const Wcfg& g, const Derivation& t,
                      std::optional<NonterminalId> root = std::nullopt);

int derivation_size(const Derivation& t);  // number of rule applications

TokenString derivation_yield(const Wcfg& g, const Derivation& t);
Weight derivation_weight(const Wcfg& g, const Derivation& t);

// Pre-order rule sequence; inverse of from_leftmost_sequence. Throws on
// bare-leaf input.
std::vector<RuleId> to_leftmost_sequence(const Wcfg& g, const Derivation& t);
Derivation from_leftmost_sequence(const Wcfg& g, const std::vector<RuleId>& seq);

// Compact one-line form, mostly for reports and test diagnostics.
std::string format_derivation(const Wcfg& g, const Derivation& t);

// All subderivations rooted at `root` with at most max_nodes rule
// applications, optionally restricted to a fixed yield. Deterministic
// order (rule ids, then children lexicographically).
std::vector<Derivation> enumerate_derivations(
    const Wcfg& g, NonterminalId root, int max_nodes,
    const std::optional<TokenString>& yield_filter = std::nullopt);

struct TruncatedWeight {
  Weight value;
  bool converged = false;
};

// Partial sum of L_G(y) over derivations with at most max_nodes rule
// applications, stratified by size. Converged when the last two strata
// moved the value by less than tol. The strata agree with
// enumerate_derivations (same sums, computed without materializing trees).
TruncatedWeight grammar_string_weight_truncated(const Wcfg& g, const TokenString& y,
                                                int max_nodes, double tol);

Wcfg parse_wcfg(std::istream& in,
                std::optional<SemiringId> override_semiring = std::nullopt);
Wcfg parse_wcfg_file(const std::string& path,
                     std::optional<SemiringId> override_semiring = std::nullopt);
void write_wcfg(std::ostream& out, const Wcfg& g);

}  // namespace wflt
