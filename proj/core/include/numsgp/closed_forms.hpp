#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "numsgp/semigroup.hpp"

namespace numsgp {

// Closed forms refuse inputs outside their stated hypotheses. permissive mode
// evaluates anyway; sweeps use it to map out where a formula actually breaks.
enum class Enforce { strict, permissive };

namespace closed_forms {

// Euclidean data shared by every closed form. Exactly one of the two
// decompositions is populated, depending on the factory used:
//   family_decompose(a, b): b = a*q + r with 1 <= r <= a-1  (third generator)
//   gap_decompose(a, d):    a = d*q + r with 0 <= r <= d-1  (gap d = b - a)
struct FamilyParams {
  std::int64_t a = 0;  // multiplicity
  std::int64_t b = 0;  // third generator
  std::int64_t d = 0;  // b - a
  std::int64_t q = 0;
  std::int64_t r = 0;
};

// Decompose b = a*q + r for a minimally generated <a, a+1, b>. Validates the
// triple (gcd is automatic, minimality is not) and checks the inequalities
// q < r and b < r(a+1) that minimality forces.
FamilyParams family_decompose(std::int64_t a, std::int64_t b);

// Decompose a = d*q + r, 0 <= r <= d-1, for the family <a, a+1, a+d>.
FamilyParams gap_decompose(std::int64_t a, std::int64_t d);

// Is <a, a+1, b> minimally generated (given a >= 3, b > a+1)?
bool family_is_minimal(std::int64_t a, std::int64_t b);

// omega_i = i(a+1) - floor(i/r) * (r(a+1) - b).
// Valid only when the Apery sequence of <a,a+1,b> w.r.t. a is strictly
// increasing; callers must establish that from the oracle (see
// apery_is_increasing), the formula itself cannot tell.
std::int64_t apery_increasing_formula(std::int64_t a, std::int64_t b,
                                      std::int64_t i);

// omega_i = i(a+1) + a * min_{0<=j<=r} ( j(a+1) - (r-q) floor((ja+i)/r) ).
// Unconditional for minimal <a, a+1, b>.
std::int64_t apery_min_formula(std::int64_t a, std::int64_t b, std::int64_t i);

bool apery_is_increasing(const AperyTable& table);

// F(<a, a+1, aq+q+1>) = a^2 - a - 1 - floor((a-1)/(q+1)) * a.
std::int64_t frobenius_special_b(std::int64_t a, std::int64_t q);

// omega_i = i(a+1) - (d-1) a floor(i/d), for 1 < d < a with a >= d^2 - 3d.
std::int64_t apery_small_d(std::int64_t a, std::int64_t d, std::int64_t i,
                           Enforce enforce = Enforce::strict);

// max_i of apery_small_d minus a.
std::int64_t frobenius_small_d(std::int64_t a, std::int64_t d,
                               Enforce enforce = Enforce::strict);

// Piecewise Frobenius number of <a, a+1, a+5> for a >= 7.
std::int64_t frobenius_d5(std::int64_t a);

// Preconditions of the main <a, a+1, a+d> closed form: a >= 3, d >= 2,
// gcd(a,d) = 1 (hence 1 <= r <= d-1), q + r >= d - 2, semigroup not
// symmetric. `violated` names the first failing condition.
struct MainPrecheck {
  bool ok = false;
  std::string violated;
  FamilyParams params;
};
MainPrecheck main_precheck(std::int64_t a, std::int64_t d);

// The main closed form:
//   1 <= r <= d-2 : F = a^2/d + (d^2-2d-r)a/d - (r+1)
//   r = d-1       : F = a^2/d + (d^2-3d+1)a/d - 1
// Both divisions are exact under the preconditions and asserted.
std::int64_t frobenius_main(std::int64_t a, std::int64_t d,
                            Enforce enforce = Enforce::strict);

// F(<d+1, d+2, 2d+1>) for d >= 5, piecewise by d mod 3.
std::int64_t frobenius_qr1(std::int64_t d);

}  // namespace closed_forms
}  // namespace numsgp
