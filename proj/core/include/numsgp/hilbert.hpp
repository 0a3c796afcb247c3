#pragma once

#include <cstdint>
#include <utility>

#include "numsgp/closed_forms.hpp"
#include "numsgp/semigroup.hpp"

namespace numsgp::hilbert {

// e0, e1 and the numbers they are computed from. stabilization_index is the
// smallest n from which length(R/m^{n+1}) = e0 (n+1) - e1 holds.
struct HilbertSummary {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
  std::int64_t genus = 0;
  std::int64_t blowup_genus = 0;
  std::int64_t frobenius = 0;
  std::int64_t stabilization_index = 0;
};

// Semigroup generated by n1 and the differences ni - n1, re-minimalized.
// This is the one operation that normalizes its generating set: the
// difference set is frequently non-minimal.
Semigroup blowup(const Semigroup& s);

// e1 = g(H) - g(H').
std::int64_t e1_by_genus(const Semigroup& s);

// e1 = sum over nonzero residues of (k_i - l_i), where omega_i = k_i n1 + i
// in H and omega'_i = l_i n1 + i in the blow-up. Every difference is >= 1;
// a smaller one is reported as an internal inconsistency.
std::int64_t e1_by_apery_delta(const Semigroup& s);

// length(R/m^{n+1}) realized combinatorially: the number of elements whose
// order is at most n.
std::int64_t hilbert_function(const Semigroup& s, std::int64_t n);

// Finds where e0(n+1) - hilbert_function(s, n) becomes constant (a run of
// multiplicity+3 equal values) and cross-checks the constant against
// e1_by_genus.
HilbertSummary e1_by_hilbert_poly(const Semigroup& s);

// e1 of <a, b> with gcd(a,b) = 1, a < b: a(a-1)/2.
std::int64_t e1_two_generated(std::int64_t a, std::int64_t b);

// e1 of the arithmetic family <a, a+d, ..., a+nd>, gcd(a,d) = 1, written
// a = q n + r with 0 <= r <= n-1. The printed closed form is trusted only
// for r = 1; everywhere else `value` is the brute-force e1 and
// closed_form_trusted is false, with the closed form's own output kept in
// closed_form_value so sweeps can quantify the discrepancy.
struct ArithmeticE1 {
  std::int64_t value = 0;
  bool closed_form_trusted = false;
  std::int64_t closed_form_value = 0;
  std::int64_t q = 0;
  std::int64_t r = 0;
};
ArithmeticE1 e1_arithmetic(std::int64_t a, std::int64_t d, std::int64_t n);

// e1 = n1 - 1 for maximal embedding dimension (e = n1).
std::int64_t e1_max_embdim(const Semigroup& s);

// e1 of <a, a+1, a+d> for 2 <= d < a, a >= d^2 - 3d, a = dq + r with
// 0 <= r <= d-1:  a(a-1)/2 - (d-1)(d q(q-1)/2 + r q).
std::int64_t e1_small_d(std::int64_t a, std::int64_t d,
                        Enforce enforce = Enforce::strict);

// e1 of <a, a+1, a+d> under the main closed form's preconditions:
//   1 <= r <= d-2 : (a^2 + d(d-2)a - r(d-1)(d-r)) / 2d
//   r = d-1       : (a^2 + d(d-2)a - (d-1)^2) / 2d
std::int64_t e1_main(std::int64_t a, std::int64_t d,
                     Enforce enforce = Enforce::strict);

// e1 of <d+1, d+2, 2d+1> for d >= 5, piecewise by d mod 3.
std::int64_t e1_qr1(std::int64_t d);

// (n1 - 1, n1(n1-1)/2); every e1 must land inside.
std::pair<std::int64_t, std::int64_t> kirby_bounds(const Semigroup& s);

}  // namespace numsgp::hilbert
