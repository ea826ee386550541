#include "wflt/semiring.hpp"

#include "wflt/base.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace wflt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRelTol = 1e-9;
constexpr double kAbsFloor = 1e-12;

void require_same(const Weight& a, const Weight& b) {
  if (a.semiring != b.semiring) {
    throw SemiringMismatch("semiring mismatch: " +
                           std::string(semiring_name(a.semiring)) + " vs " +
                           std::string(semiring_name(b.semiring)));
  }
}

bool close(double a, double b, double rel, double abs_floor) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  double scale = std::max(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= std::max(abs_floor, rel * scale);
}

}  // namespace

SemiringId semiring_from_name(std::string_view name) {
  if (name == "boolean") return SemiringId::Boolean;
  if (name == "real") return SemiringId::Real;
  if (name == "tropical") return SemiringId::Tropical;
  throw std::invalid_argument("unknown semiring: " + std::string(name));
}

std::string_view semiring_name(SemiringId id) {
  switch (id) {
    case SemiringId::Boolean: return "boolean";
    case SemiringId::Real: return "real";
    case SemiringId::Tropical: return "tropical";
  }
  return "?";
}

Weight zero(SemiringId id) {
  switch (id) {
    case SemiringId::Boolean: return {id, 0.0};
    case SemiringId::Real: return {id, 0.0};
    case SemiringId::Tropical: return {id, kInf};
  }
  return {id, 0.0};
}

Weight one(SemiringId id) {
  switch (id) {
    case SemiringId::Boolean: return {id, 1.0};
    case SemiringId::Real: return {id, 1.0};
    case SemiringId::Tropical: return {id, 0.0};
  }
  return {id, 1.0};
}

Weight make_weight(SemiringId id, double value) {
  switch (id) {
    case SemiringId::Boolean:
      if (value != 0.0 && value != 1.0) {
        throw std::invalid_argument("boolean weight must be 0 or 1");
      }
      break;
    case SemiringId::Real:
      if (!(value >= 0.0) || std::isinf(value)) {
        throw std::invalid_argument("real weight must be a finite nonnegative number");
      }
      break;
    case SemiringId::Tropical:
      if (std::isnan(value) || value == -kInf) {
        throw std::invalid_argument("tropical weight must be a real number or +inf");
      }
      break;
  }
  return {id, value};
}

Weight plus(const Weight& a, const Weight& b) {
  require_same(a, b);
  switch (a.semiring) {
    case SemiringId::Boolean: return {a.semiring, (a.value != 0.0 || b.value != 0.0) ? 1.0 : 0.0};
    case SemiringId::Real: return {a.semiring, a.value + b.value};
    case SemiringId::Tropical: return {a.semiring, std::min(a.value, b.value)};
  }
  return a;
}

Weight times(const Weight& a, const Weight& b) {
  require_same(a, b);
  switch (a.semiring) {
    case SemiringId::Boolean: return {a.semiring, (a.value != 0.0 && b.value != 0.0) ? 1.0 : 0.0};
    case SemiringId::Real: return {a.semiring, a.value * b.value};
    case SemiringId::Tropical:
      // inf is absorbing; plain addition would already give inf here, but
      // keep the annihilator explicit to dodge inf + (-inf).
      if (std::isinf(a.value) || std::isinf(b.value)) return zero(a.semiring);
      return {a.semiring, a.value + b.value};
  }
  return a;
}

std::optional<Weight> star(const Weight& a) {
  switch (a.semiring) {
    case SemiringId::Boolean:
      return one(a.semiring);
    case SemiringId::Real:
      if (a.value < 1.0) return Weight{a.semiring, 1.0 / (1.0 - a.value)};
      return std::nullopt;
    case SemiringId::Tropical:
      if (a.value >= 0.0) return one(a.semiring);
      return std::nullopt;
  }
  return std::nullopt;
}

bool weight_eq(const Weight& a, const Weight& b) {
  require_same(a, b);
  if (a.semiring == SemiringId::Boolean) return a.value == b.value;
  return close(a.value, b.value, kRelTol, kAbsFloor);
}

bool weight_close(const Weight& a, const Weight& b, double tol) {
  require_same(a, b);
  if (a.semiring == SemiringId::Boolean) return a.value == b.value;
  return close(a.value, b.value, tol, tol);
}

bool is_zero(const Weight& w) { return weight_eq(w, zero(w.semiring)); }
bool is_one(const Weight& w) { return weight_eq(w, one(w.semiring)); }

std::string format_weight(const Weight& w) {
  if (std::isinf(w.value)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", w.value);
  return buf;
}

Weight parse_weight(SemiringId id, const std::string& text) {
  if (text == "inf" || text == "+inf") return make_weight(id, kInf);
  double v = 0.0;
  try {
    std::size_t used = 0;
    v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ParseError("bad weight literal: " + text);
  }
  try {
    return make_weight(id, v);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + ": " + text);
  }
}

}  // namespace wflt
