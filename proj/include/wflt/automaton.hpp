// automaton.hpp -- weighted finite-state automata with epsilon arcs
#pragma once

#include "wflt/base.hpp"
#include "wflt/semiring.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace wflt {

using StateId = int;
using ArcId = int;

// An arc q0 --label/weight--> q1. A missing label is an epsilon arc.
struct Arc {
  ArcId id = -1;
  StateId source = -1;
  std::optional<Symbol> label;
  Weight weight;
  StateId target = -1;
};

// A = (Sigma, Q, Delta, lambda, rho). Arcs form a multiset: two arcs may
// agree in everything but their ArcId. Zero-weight arcs are rejected.
struct Wfsa {
  SemiringId semiring = SemiringId::Real;
  std::set<Symbol> alphabet;
  std::vector<std::string> state_names;
  std::map<std::string, StateId> state_ids;
  std::vector<Weight> lambda;  // initial weights, indexed by StateId
  std::vector<Weight> rho;     // final weights, indexed by StateId
  std::vector<Arc> arcs;

  explicit Wfsa(SemiringId sr = SemiringId::Real) : semiring(sr) {}

  int num_states() const { return static_cast<int>(state_names.size()); }

  StateId add_state(const std::string& name);
  StateId state(const std::string& name) const;  // throws on unknown name

  void set_initial(StateId q, const Weight& w);
  void set_final(StateId q, const Weight& w);

  // Registers non-epsilon labels in the alphabet.
  ArcId add_arc(StateId source, std::optional<Symbol> label, const Weight& w,
                StateId target);

  std::vector<StateId> initial_states() const;  // ascending
  std::vector<StateId> final_states() const;    // ascending
};

// A sequence of adjacent arcs; `anchor` names the single state of a
// length-0 path and is ignored otherwise.
struct Path {
  std::vector<ArcId> arcs;
  StateId anchor = -1;
};

bool same_path(const Path& a, const Path& b);

// Throws std::invalid_argument on unknown arc ids or broken adjacency.
void check_path(const Wfsa& a, const Path& pi);

StateId path_first_state(const Wfsa& a, const Path& pi);
StateId path_last_state(const Wfsa& a, const Path& pi);

// First state initial and last state final (length 0: anchor in I and F).
bool is_full_path(const Wfsa& a, const Path& pi);

TokenString path_yield(const Wfsa& a, const Path& pi);

// Full path: lambda x arc product x rho; subpath: arc product only.
// Throws std::invalid_argument when as_subpath is false and pi is not full.
Weight path_weight(const Wfsa& a, const Path& pi, bool as_subpath);

// All well-formed paths with at most max_arcs arcs, restricted to full
// paths and/or a fixed yield on request. Lexicographic by arc sequence.
std::vector<Path> enumerate_paths(const Wfsa& a, int max_arcs,
                                  const std::optional<TokenString>& yield_filter,
                                  bool full_only);

using WeightMatrix = std::vector<std::vector<Weight>>;

// All-pairs epsilon-subpath sums, including the length-0 subpath on the
// diagonal. Lehmann elimination; nullopt when a pivot star diverges.
std::optional<WeightMatrix> epsilon_closure(const Wfsa& a);

// L_A(y): lambda^T E M(y_1) E ... M(y_n) E rho. Nullopt when the epsilon
// closure diverges.
std::optional<Weight> automaton_string_weight(const Wfsa& a, const TokenString& y);

// Line-based text format; `override_semiring` must agree with a header
// if both are present. Defaults to real when no header exists.
Wfsa parse_wfsa(std::istream& in,
                std::optional<SemiringId> override_semiring = std::nullopt);
Wfsa parse_wfsa_file(const std::string& path,
                     std::optional<SemiringId> override_semiring = std::nullopt);
void write_wfsa(std::ostream& out, const Wfsa& a);

}  // namespace wflt
