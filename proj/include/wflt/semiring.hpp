// semiring.hpp -- commutative semirings with a partial Kleene star
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wflt {

enum class SemiringId { Boolean, Real, Tropical };

struct SemiringMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

SemiringId semiring_from_name(std::string_view name);
std::string_view semiring_name(SemiringId id);

// A semiring element tagged with its semiring. The boolean carrier is
// {0, 1}; the tropical carrier is the reals plus +inf (its zero).
struct Weight {
  SemiringId semiring = SemiringId::Real;
  double value = 0.0;
};

Weight zero(SemiringId id);
Weight one(SemiringId id);

// Validates that `value` lies in the carrier of `id`.
Weight make_weight(SemiringId id, double value);

Weight plus(const Weight& a, const Weight& b);
Weight times(const Weight& a, const Weight& b);

// Kleene star: the sum of all powers of `a`. Returns nullopt when the
// series has no value in the carrier.
std::optional<Weight> star(const Weight& a);

// Semiring-aware equality. Real values compare with relative tolerance
// 1e-9 and absolute floor 1e-12; tropical is exact on +inf and uses the
// same tolerance on finite values; boolean is exact.
bool weight_eq(const Weight& a, const Weight& b);

// Like weight_eq but with a caller-chosen tolerance for real/tropical.
bool weight_close(const Weight& a, const Weight& b, double tol);

bool is_zero(const Weight& w);
bool is_one(const Weight& w);

std::string format_weight(const Weight& w);
Weight parse_weight(SemiringId id, const std::string& text);

}  // namespace wflt
