#include "numsgp/closed_forms.hpp"

#include <numeric>

#include "numsgp/checked.hpp"

namespace numsgp::closed_forms {

namespace {

void require_range(std::int64_t i, std::int64_t a) {
  if (i < 0 || i >= a) {
    fail(errc::index_out_of_range,
         "index " + std::to_string(i) + " outside [0, " + std::to_string(a - 1) +
             "]");
  }
}

}  // namespace

bool family_is_minimal(std::int64_t a, std::int64_t b) {
  if (a < 3 || b <= a + 1) return false;
  // b lies in <a, a+1> iff (b mod a) <= (b div a): write b = s*a + y with
  // minimal y, then b = x*a + y*(a+1) needs y <= s.
  return b % a > b / a;
}

FamilyParams family_decompose(std::int64_t a, std::int64_t b) {
  if (a < 3 || b <= a + 1) {
    fail(errc::precondition_failed,
         "<a,a+1,b> needs a >= 3 and b > a+1, got a=" + std::to_string(a) +
             " b=" + std::to_string(b));
  }
  if (b > generator_cap()) {
    fail(errc::overflow, "generator " + std::to_string(b) + " exceeds cap");
  }
  if (!family_is_minimal(a, b)) {
    fail(errc::precondition_failed,
         "<" + std::to_string(a) + "," + std::to_string(a + 1) + "," +
             std::to_string(b) + "> is not minimally generated");
  }
  FamilyParams p;
  p.a = a;
  p.b = b;
  p.d = b - a;
  p.q = b / a;
  p.r = b % a;
  // Minimality forces q < r and b < r(a+1); a violation would mean the
  // minimality test above is wrong.
  if (!(p.q < p.r) || !(b < checked_mul(p.r, a + 1))) {
    fail(errc::internal_inconsistency,
         "family inequalities q<r, b<r(a+1) failed for a=" + std::to_string(a) +
             " b=" + std::to_string(b));
  }
  return p;
}

FamilyParams gap_decompose(std::int64_t a, std::int64_t d) {
  if (d < 1 || a < 1) {
    fail(errc::precondition_failed, "gap_decompose needs positive a, d");
  }
  FamilyParams p;
  p.a = a;
  p.d = d;
  p.b = checked_add(a, d);
  p.q = a / d;
  p.r = a % d;
  return p;
}

std::int64_t apery_increasing_formula(std::int64_t a, std::int64_t b,
                                      std::int64_t i) {
  const FamilyParams p = family_decompose(a, b);
  require_range(i, a);
  const std::int64_t drop = checked_sub(checked_mul(p.r, a + 1), b);
  return checked_sub(checked_mul(i, a + 1), checked_mul(i / p.r, drop));
}

std::int64_t apery_min_formula(std::int64_t a, std::int64_t b, std::int64_t i) {
  const FamilyParams p = family_decompose(a, b);
  require_range(i, a);
  if (i == 0) return 0;
  const std::int64_t step = p.r - p.q;  // positive by q < r
  std::int64_t best = 0;                // j = 0 term is -(r-q) floor(i/r) <= 0
  for (std::int64_t j = 0; j <= p.r; ++j) {
    const std::int64_t term = checked_sub(
        checked_mul(j, a + 1),
        checked_mul(step, checked_add(checked_mul(j, a), i) / p.r));
    if (j == 0 || term < best) best = term;
  }
  return checked_add(checked_mul(i, a + 1), checked_mul(a, best));
}

bool apery_is_increasing(const AperyTable& table) {
  for (std::size_t i = 1; i < table.omegas.size(); ++i) {
    if (table.omegas[i] <= table.omegas[i - 1]) return false;
  }
  return true;
}

std::int64_t frobenius_special_b(std::int64_t a, std::int64_t q) {
  if (a < 3 || q <= 0 || q >= a) {
    fail(errc::precondition_failed,
         "frobenius_special_b needs a >= 3, 0 < q < a");
  }
  const std::int64_t b = checked_add(checked_mul(q, a + 1), 1);  // aq + q + 1
  if (!family_is_minimal(a, b)) {
    fail(errc::precondition_failed,
         "<" + std::to_string(a) + "," + std::to_string(a + 1) + "," +
             std::to_string(b) + "> is not minimally generated");
  }
  return checked_sub(checked_sub(checked_mul(a, a), a + 1),
                     checked_mul((a - 1) / (q + 1), a));
}

namespace {

void require_small_d(std::int64_t a, std::int64_t d, Enforce enforce) {
  if (enforce == Enforce::permissive) return;
  if (d <= 1 || d >= a) {
    fail(errc::precondition_failed, "needs 1 < d < a");
  }
  if (a < checked_sub(checked_mul(d, d), checked_mul(3, d))) {
    fail(errc::precondition_failed,
         "needs a >= d^2 - 3d, got a=" + std::to_string(a) +
             " d=" + std::to_string(d));
  }
}

}  // namespace

std::int64_t apery_small_d(std::int64_t a, std::int64_t d, std::int64_t i,
                           Enforce enforce) {
  require_small_d(a, d, enforce);
  require_range(i, a);
  return checked_sub(checked_mul(i, a + 1),
                     checked_mul(checked_mul(d - 1, a), i / d));
}

std::int64_t frobenius_small_d(std::int64_t a, std::int64_t d,
                               Enforce enforce) {
  require_small_d(a, d, enforce);
  std::int64_t best = 0;
  for (std::int64_t i = 1; i < a; ++i) {
    best = std::max(best, apery_small_d(a, d, i, Enforce::permissive));
  }
  return checked_sub(best, a);
}

std::int64_t frobenius_d5(std::int64_t a) {
  if (a < 7) {
    fail(errc::precondition_failed,
         "frobenius_d5 needs a >= 7, got " + std::to_string(a));
  }
  const std::int64_t base = checked_mul(a / 5, a + 5);
  const std::int64_t tail = (a % 5 == 4) ? checked_add(checked_mul(2, a), 3)
                                         : checked_sub(checked_mul(2, a), 1);
  return checked_add(base, tail);
}

MainPrecheck main_precheck(std::int64_t a, std::int64_t d) {
  MainPrecheck out;
  if (a < 3 || d < 2) {
    out.violated = "requires a >= 3 and d >= 2";
    return out;
  }
  if (std::gcd(a, d) != 1) {
    out.violated = "gcd(a,d) = " + std::to_string(std::gcd(a, d)) + ", not 1";
    return out;
  }
  out.params = gap_decompose(a, d);
  if (out.params.r < 1 || out.params.r > d - 1) {
    out.violated = "remainder outside [1, d-1]";
    return out;
  }
  if (out.params.q + out.params.r < d - 2) {
    out.violated = "q + r < d - 2";
    return out;
  }
  if (!family_is_minimal(a, checked_add(a, d))) {
    out.violated = "triple not minimally generated";
    return out;
  }
  const Semigroup h({a, a + 1, checked_add(a, d)});
  if (h.is_symmetric()) {
    out.violated = "semigroup is symmetric";
    return out;
  }
  out.ok = true;
  return out;
}

std::int64_t frobenius_main(std::int64_t a, std::int64_t d, Enforce enforce) {
  FamilyParams p;
  if (enforce == Enforce::strict) {
    const MainPrecheck pre = main_precheck(a, d);
    if (!pre.ok) fail(errc::precondition_failed, pre.violated);
    p = pre.params;
  } else {
    p = gap_decompose(a, d);
  }
  // Factored evaluation. For 1 <= r <= d-2 the exact value is
  //   a * (a + d^2 - 2d - r)/d - (r+1),
  // and for r = d-1 it is a * (a + d^2 - 3d + 1)/d - 1; in both cases the
  // inner quotient is q + d - 2. Doing the division before the product keeps
  // every intermediate at O(a^2) even for d close to a.
  const std::int64_t d2 = checked_mul(d, d);
  std::int64_t numerator, subtrahend;
  if (p.r <= d - 2) {
    numerator = checked_sub(checked_add(a, d2), checked_add(checked_mul(2, d), p.r));
    subtrahend = p.r + 1;
  } else {
    numerator = checked_add(checked_sub(checked_add(a, d2), checked_mul(3, d)), 1);
    subtrahend = 1;
  }
  const std::int64_t quotient = exact_div(
      numerator, d,
      enforce == Enforce::strict ? errc::internal_inconsistency
                                 : errc::precondition_failed);
  return checked_sub(checked_mul(a, quotient), subtrahend);
}

std::int64_t frobenius_qr1(std::int64_t d) {
  if (d < 5) {
    fail(errc::precondition_failed,
         "frobenius_qr1 needs d >= 5, got " + std::to_string(d));
  }
  const std::int64_t d2 = checked_mul(d, d);
  switch (d % 3) {
    case 0:
      return exact_div(checked_sub(checked_add(checked_mul(2, d2), d), 3), 3);
    case 1:
      return exact_div(
          checked_sub(checked_add(checked_mul(2, d2), checked_mul(2, d)), 1), 3);
    default:
      return exact_div(checked_sub(checked_mul(2, d2), 2), 3);
  }
}

}  // namespace numsgp::closed_forms
