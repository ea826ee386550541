#include "wflt/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>

namespace wflt {

StateId Wfsa::add_state(const std::string& name) {
  auto it = state_ids.find(name);
  if (it != state_ids.end()) return it->second;
  StateId q = num_states();
  state_names.push_back(name);
  state_ids.emplace(name, q);
  lambda.push_back(zero(semiring));
  rho.push_back(zero(semiring));
  return q;
}

StateId Wfsa::state(const std::string& name) const {
  auto it = state_ids.find(name);
  if (it == state_ids.end()) throw std::invalid_argument("unknown state: " + name);
  return it->second;
}

void Wfsa::set_initial(StateId q, const Weight& w) {
  if (w.semiring != semiring) throw SemiringMismatch("initial weight semiring mismatch");
  lambda.at(q) = w;
}

void Wfsa::set_final(StateId q, const Weight& w) {
  if (w.semiring != semiring) throw SemiringMismatch("final weight semiring mismatch");
  rho.at(q) = w;
}

ArcId Wfsa::add_arc(StateId source, std::optional<Symbol> label, const Weight& w,
                    StateId target) {
  if (w.semiring != semiring) throw SemiringMismatch("arc weight semiring mismatch");
  if (source < 0 || source >= num_states() || target < 0 || target >= num_states()) {
    throw std::invalid_argument("arc endpoint out of range");
  }
  if (is_zero(w)) throw std::invalid_argument("zero-weight arc rejected");
  if (label && *label == kEpsilonToken) {
    throw std::invalid_argument("<eps> is reserved and not an alphabet symbol");
  }
  ArcId id = static_cast<ArcId>(arcs.size());
  if (label) alphabet.insert(*label);
  arcs.push_back(Arc{id, source, std::move(label), w, target});
  return id;
}

std::vector<StateId> Wfsa::initial_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (!is_zero(lambda[q])) out.push_back(q);
  return out;
}

std::vector<StateId> Wfsa::final_states() const {
  std::vector<StateId> out;
  for (StateId q = 0; q < num_states(); ++q)
    if (!is_zero(rho[q])) out.push_back(q);
  return out;
}

bool same_path(const Path& a, const Path& b) {
  if (a.arcs != b.arcs) return false;
  return !a.arcs.empty() || a.anchor == b.anchor;
}

void check_path(const Wfsa& a, const Path& pi) {
  if (pi.arcs.empty()) {
    if (pi.anchor < 0 || pi.anchor >= a.num_states()) {
      throw std::invalid_argument("length-0 path has no valid anchor state");
    }
    return;
  }
  for (std::size_t n = 0; n < pi.arcs.size(); ++n) {
    ArcId id = pi.arcs[n];
    if (id < 0 || id >= static_cast<ArcId>(a.arcs.size())) {
      throw std::invalid_argument("unknown arc id in path");
    }
    if (n > 0 && a.arcs[pi.arcs[n - 1]].target != a.arcs[id].source) {
      throw std::invalid_argument("path arcs are not adjacent");
    }
  }
}

StateId path_first_state(const Wfsa& a, const Path& pi) {
  return pi.arcs.empty() ? pi.anchor : a.arcs[pi.arcs.front()].source;
}

StateId path_last_state(const Wfsa& a, const Path& pi) {
  return pi.arcs.empty() ? pi.anchor : a.arcs[pi.arcs.back()].target;
}

bool is_full_path(const Wfsa& a, const Path& pi) {
  check_path(a, pi);
  return !is_zero(a.lambda[path_first_state(a, pi)]) &&
         !is_zero(a.rho[path_last_state(a, pi)]);
}

TokenString path_yield(const Wfsa& a, const Path& pi) {
  check_path(a, pi);
  TokenString out;
  for (ArcId id : pi.arcs) {
    const auto& label = a.arcs[id].label;
    if (label) out.push_back(*label);
  }
  return out;
}

Weight path_weight(const Wfsa& a, const Path& pi, bool as_subpath) {
  check_path(a, pi);
  if (!as_subpath && !is_full_path(a, pi)) {
    throw std::invalid_argument("path is not full (initial-to-final)");
  }
  Weight w = one(a.semiring);
  for (ArcId id : pi.arcs) w = times(w, a.arcs[id].weight);
  if (!as_subpath) {
    w = times(a.lambda[path_first_state(a, pi)],
              times(w, a.rho[path_last_state(a, pi)]));
  }
  return w;
}

namespace {

struct PathEnumerator {
  const Wfsa& a;
  int max_arcs;
  const std::optional<TokenString>* filter;
  bool full_only;
  std::vector<std::vector<ArcId>> out_arcs;  // arcs per state, ascending id
  std::vector<Path> result;

  Path current;

  void run() {
    out_arcs.assign(a.num_states(), {});
    for (const Arc& arc : a.arcs) out_arcs[arc.source].push_back(arc.id);
    std::vector<StateId> starts;
    if (full_only) {
      starts = a.initial_states();
    } else {
      for (StateId q = 0; q < a.num_states(); ++q) starts.push_back(q);
    }
    for (StateId q : starts) {
      current = Path{{}, q};
      dfs(q, 0);
    }
    std::sort(result.begin(), result.end(), [](const Path& x, const Path& y) {
      if (x.arcs != y.arcs) return x.arcs < y.arcs;
      return x.anchor < y.anchor;
    });
  }

  void dfs(StateId q, std::size_t pos) {
    bool yield_done = !*filter || pos == (**filter).size();
    bool endpoint_ok = !full_only || !is_zero(a.rho[q]);
    if (yield_done && endpoint_ok) result.push_back(current);
    if (static_cast<int>(current.arcs.size()) == max_arcs) return;
    for (ArcId id : out_arcs[q]) {
      const Arc& arc = a.arcs[id];
      std::size_t next_pos = pos;
      if (*filter && arc.label) {
        if (pos >= (**filter).size() || (**filter)[pos] != *arc.label) continue;
        next_pos = pos + 1;
      }
      current.arcs.push_back(id);
      dfs(arc.target, next_pos);
      current.arcs.pop_back();
    }
  }
};

}  // namespace

std::vector<Path> enumerate_paths(const Wfsa& a, int max_arcs,
                                  const std::optional<TokenString>& yield_filter,
                                  bool full_only) {
  if (max_arcs < 0) throw std::invalid_argument("max_arcs must be >= 0");
  PathEnumerator e{a, max_arcs, &yield_filter, full_only, {}, {}, {}};
  e.run();
  return e.result;
}

std::optional<WeightMatrix> epsilon_closure(const Wfsa& a) {
  const int n = a.num_states();
  WeightMatrix m(n, std::vector<Weight>(n, zero(a.semiring)));
  for (const Arc& arc : a.arcs) {
    if (!arc.label) m[arc.source][arc.target] = plus(m[arc.source][arc.target], arc.weight);
  }
  // Lehmann elimination: after pivot k, m[i][j] sums all nonempty epsilon
  // subpaths whose interior states are <= k.
  for (int k = 0; k < n; ++k) {
    auto sk = star(m[k][k]);
    if (!sk) return std::nullopt;
    WeightMatrix next = m;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        next[i][j] = plus(m[i][j], times(times(m[i][k], *sk), m[k][j]));
      }
    }
    m = std::move(next);
  }
  for (int i = 0; i < n; ++i) m[i][i] = plus(m[i][i], one(a.semiring));
  return m;
}

namespace {

std::vector<Weight> vec_times_mat(const std::vector<Weight>& v, const WeightMatrix& m,
                                  SemiringId sr) {
  const int n = static_cast<int>(v.size());
  std::vector<Weight> out(n, zero(sr));
  for (int i = 0; i < n; ++i) {
    if (is_zero(v[i])) continue;
    for (int j = 0; j < n; ++j) out[j] = plus(out[j], times(v[i], m[i][j]));
  }
  return out;
}

WeightMatrix symbol_matrix(const Wfsa& a, const Symbol& sym) {
  const int n = a.num_states();
  WeightMatrix m(n, std::vector<Weight>(n, zero(a.semiring)));
  for (const Arc& arc : a.arcs) {
    if (arc.label && *arc.label == sym) {
      m[arc.source][arc.target] = plus(m[arc.source][arc.target], arc.weight);
    }
  }
  return m;
}

}  // namespace

std::optional<Weight> automaton_string_weight(const Wfsa& a, const TokenString& y) {
  auto closure = epsilon_closure(a);
  if (!closure) return std::nullopt;
  std::vector<Weight> v = a.lambda;
  v = vec_times_mat(v, *closure, a.semiring);
  for (const Symbol& sym : y) {
    v = vec_times_mat(v, symbol_matrix(a, sym), a.semiring);
    v = vec_times_mat(v, *closure, a.semiring);
  }
  Weight acc = zero(a.semiring);
  for (int q = 0; q < a.num_states(); ++q) acc = plus(acc, times(v[q], a.rho[q]));
  return acc;
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg);
}

}  // namespace

Wfsa parse_wfsa(std::istream& in, std::optional<SemiringId> override_semiring) {
  std::vector<std::vector<std::string>> lines;
  std::vector<int> line_nos;
  std::string raw;
  int line_no = 0;
  std::optional<SemiringId> header;
  int header_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = split_tokens(raw);
    if (tokens.empty()) continue;
    if (tokens[0] == "semiring") {
      if (tokens.size() != 2) parse_fail(line_no, "expected: semiring NAME");
      try {
        header = semiring_from_name(tokens[1]);
      } catch (const std::invalid_argument& e) {
        parse_fail(line_no, e.what());
      }
      header_line = line_no;
      continue;
    }
    lines.push_back(std::move(tokens));
    line_nos.push_back(line_no);
  }
  if (header && override_semiring && *header != *override_semiring) {
    parse_fail(header_line, "semiring header disagrees with requested semiring");
  }
  SemiringId sr = header ? *header
                         : (override_semiring ? *override_semiring : SemiringId::Real);

  Wfsa a(sr);
  // First pass declares states so arcs may reference them in any order.
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] != "state") continue;
    if (t.size() < 2) parse_fail(line_nos[i], "expected: state NAME [initial [W]] [final [W]]");
    StateId q = a.add_state(t[1]);
    std::size_t k = 2;
    while (k < t.size()) {
      bool initial = t[k] == "initial";
      bool final_mark = t[k] == "final";
      if (!initial && !final_mark) parse_fail(line_nos[i], "unexpected token: " + t[k]);
      ++k;
      Weight w = one(sr);
      if (k < t.size() && t[k] != "initial" && t[k] != "final") {
        try {
          w = parse_weight(sr, t[k]);
        } catch (const ParseError& e) {
          parse_fail(line_nos[i], e.what());
        }
        ++k;
      }
      if (initial) a.set_initial(q, w);
      if (final_mark) a.set_final(q, w);
    }
  }
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] == "state") continue;
    if (t[0] != "arc") parse_fail(line_nos[i], "unknown directive: " + t[0]);
    if (t.size() != 4 && t.size() != 5) {
      parse_fail(line_nos[i], "expected: arc SRC DST LABEL [WEIGHT]");
    }
    if (!a.state_ids.count(t[1])) parse_fail(line_nos[i], "arc source lacks a state line: " + t[1]);
    if (!a.state_ids.count(t[2])) parse_fail(line_nos[i], "arc target lacks a state line: " + t[2]);
    std::optional<Symbol> label;
    if (t[3] != kEpsilonToken) label = t[3];
    Weight w = one(sr);
    if (t.size() == 5) {
      try {
        w = parse_weight(sr, t[4]);
      } catch (const ParseError& e) {
        parse_fail(line_nos[i], e.what());
      }
    }
    try {
      a.add_arc(a.state(t[1]), std::move(label), w, a.state(t[2]));
    } catch (const std::invalid_argument& e) {
      parse_fail(line_nos[i], e.what());
    }
  }
  return a;
}

Wfsa parse_wfsa_file(const std::string& path, std::optional<SemiringId> override_semiring) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_wfsa(in, override_semiring);
}

void write_wfsa(std::ostream& out, const Wfsa& a) {
  out << "semiring " << semiring_name(a.semiring) << "\n";
  for (StateId q = 0; q < a.num_states(); ++q) {
    out << "state " << a.state_names[q];
    if (!is_zero(a.lambda[q])) out << " initial " << format_weight(a.lambda[q]);
    if (!is_zero(a.rho[q])) out << " final " << format_weight(a.rho[q]);
    out << "\n";
  }
  for (const Arc& arc : a.arcs) {
    out << "arc " << a.state_names[arc.source] << " " << a.state_names[arc.target]
        << " " << (arc.label ? *arc.label : std::string(kEpsilonToken)) << " "
        << format_weight(arc.weight) << "\n";
  }
}

}  // namespace wflt
