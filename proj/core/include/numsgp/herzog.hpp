#pragma once

#include <cstdint>

#include "numsgp/closed_forms.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp::herzog {

// Exponents of the three binomials generating the defining ideal of a
// 3-generated non-symmetric semigroup ring, i.e. the 2x2 minors of
//
//     ( y^beta_p  z^gamma_p  x^alpha_p )
//     ( x^alpha   y^beta     z^gamma   )
//
// together with the column degrees c1 = alpha + alpha_p, c2 = beta + beta_p,
// c3 = gamma + gamma_p. The degree identities
//     c1 n1 = beta_p n2 + gamma n3
//     c2 n2 = alpha n1 + gamma_p n3
//     c3 n3 = alpha_p n1 + beta n2
// hold for every value this module hands out.
struct HerzogData {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  std::int64_t gamma = 0;
  std::int64_t alpha_p = 0;
  std::int64_t beta_p = 0;
  std::int64_t gamma_p = 0;
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;
  std::int64_t c3 = 0;

  friend bool operator==(const HerzogData&, const HerzogData&) = default;
};

bool degree_identities_hold(const HerzogData& p, std::int64_t n1,
                            std::int64_t n2, std::int64_t n3);

// Recovers the parameters of a 3-generated non-symmetric semigroup:
// c_i is the least positive multiple of n_i lying in the monoid generated by
// the other two, and the unique strictly positive decomposition of c_i n_i
// over the other two generators yields the six exponents. Zero or multiple
// positive decompositions indicate a symmetry-detection bug and are hard
// errors.
HerzogData herzog_parameters(const Semigroup& s);

// Parameters of <a, a+1, a+d> read off the explicit matrix
//   ( y^r      z          x^{q+r+2-d} )
//   ( x^{d-1}  y^{d-r}    z^q         )
// valid for gcd(a,d) = 1, a = dq + r, 1 <= r <= d-1, q + r >= d-2 (symmetry
// of the semigroup is NOT required here; at q + r = d-2 the top-right entry
// degenerates to a unit). Degree identities are asserted.
HerzogData matrix_main(std::int64_t a, std::int64_t d,
                       Enforce enforce = Enforce::strict);

// Parameters of <d+1, d+2, 2d+1>, d >= 5, by residue of d mod 3. The
// d = 1 mod 3 matrix carries a unit entry (alpha = 0); that is the one place
// a zero exponent is legitimate.
HerzogData matrix_qr1(std::int64_t d);

// F(H) from the parameters:
//   beta_p n2 > alpha n1 : F = beta_p n2 + (gamma + gamma_p) n3 - sum(n_i)
//   beta_p n2 < alpha n1 : F = alpha n1  + (gamma + gamma_p) n3 - sum(n_i)
// The tie beta_p n2 = alpha n1 has no stated rule and is reported, never
// guessed.
std::int64_t frobenius_from_parameters(const Semigroup& s, const HerzogData& p);

// g(H) = (alpha beta gamma + F + 1)/2         when beta_p n2 > alpha n1
// g(H) = (alpha_p beta_p gamma_p + F + 1)/2   when beta_p n2 < alpha n1
std::int64_t genus_from_parameters(const Semigroup& s, const HerzogData& p);

// Ground truth for Cohen-Macaulayness of the associated graded ring: CM iff
// ord(w + n1) = ord(w) + 1 for every w in the Apery set of n1.
bool graded_cm_oracle(const Semigroup& s);

enum class CmStatus { cm, not_cm, undetermined };

// Column-degree criterion: CM when beta + beta_p = alpha + gamma_p, not CM
// when beta + beta_p > alpha + gamma_p. Nothing is asserted for "<", so that
// region stays undetermined by design.
CmStatus graded_cm_from_parameters(const HerzogData& p);

const char* cm_status_name(CmStatus status);

}  // namespace numsgp::herzog
