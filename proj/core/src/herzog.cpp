#include "numsgp/herzog.hpp"

#include <numeric>
#include <vector>

#include "numsgp/checked.hpp"

namespace numsgp::herzog {

namespace {

// Membership in the monoid generated by two positive integers, O(log) per
// query: reduce by the gcd, then compare against the minimal element of the
// residue class mod p, which is ((n q^{-1}) mod p) * q.
bool pair_contains(std::int64_t p, std::int64_t q, std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  const std::int64_t g = std::gcd(p, q);
  if (n % g != 0) return false;
  p /= g;
  q /= g;
  n /= g;
  if (p > q) std::swap(p, q);
  if (p == 1) return true;
  // Extended Euclid for q^{-1} mod p.
  std::int64_t inv = 0, next = 1, m = p, x = q % p;
  while (x != 0) {
    const std::int64_t quot = m / x;
    inv -= quot * next;
    std::swap(inv, next);
    m -= quot * x;
    std::swap(m, x);
  }
  // m == gcd(q mod p, p) == 1 here.
  inv %= p;
  if (inv < 0) inv += p;
  const std::int64_t y = (static_cast<std::int64_t>(
                             (__int128{n % p} * inv) % p));
  // Minimal member congruent to n mod p is y*q.
  return checked_mul(y, q) <= n;
}

// Least k > 0 with k*target in <u, v>. Existence is guaranteed below u*v.
std::int64_t minimal_degree(std::int64_t target, std::int64_t u,
                            std::int64_t v) {
  const std::int64_t bound = checked_mul(u, v);
  for (std::int64_t k = 1; k <= bound; ++k) {
    if (pair_contains(u, v, checked_mul(k, target))) return k;
  }
  fail(errc::internal_inconsistency,
       "no multiple of " + std::to_string(target) + " found in <" +
           std::to_string(u) + "," + std::to_string(v) + ">");
}

// All strictly positive (x, y) with x*u + y*v = total; exactly one must
// exist for the parameters to be well defined.
struct Decomposition {
  std::int64_t x = 0, y = 0;
};
Decomposition unique_positive_decomposition(std::int64_t total, std::int64_t u,
                                            std::int64_t v,
                                            const Semigroup& s) {
  Decomposition found;
  int count = 0;
  for (std::int64_t x = 1; checked_mul(x, u) < total; ++x) {
    const std::int64_t rest = total - x * u;
    if (rest % v == 0 && rest / v >= 1) {
      ++count;
      found = {x, rest / v};
    }
  }
  if (count != 1) {
    fail(errc::no_positive_decomposition,
         std::to_string(total) + " has " + std::to_string(count) +
             " strictly positive decompositions over (" + std::to_string(u) +
             ", " + std::to_string(v) + ") for " + to_string(s));
  }
  return found;
}

HerzogData with_column_degrees(HerzogData p) {
  p.c1 = checked_add(p.alpha, p.alpha_p);
  p.c2 = checked_add(p.beta, p.beta_p);
  p.c3 = checked_add(p.gamma, p.gamma_p);
  return p;
}

void assert_degree_identities(const HerzogData& p, std::int64_t n1,
                              std::int64_t n2, std::int64_t n3,
                              errc on_failure) {
  if (!degree_identities_hold(p, n1, n2, n3)) {
    fail(on_failure, "degree identities fail on (" + std::to_string(n1) + "," +
                         std::to_string(n2) + "," + std::to_string(n3) + ")");
  }
}

}  // namespace

bool degree_identities_hold(const HerzogData& p, std::int64_t n1,
                            std::int64_t n2, std::int64_t n3) {
  return checked_mul(p.c1, n1) ==
             checked_add(checked_mul(p.beta_p, n2), checked_mul(p.gamma, n3)) &&
         checked_mul(p.c2, n2) ==
             checked_add(checked_mul(p.alpha, n1), checked_mul(p.gamma_p, n3)) &&
         checked_mul(p.c3, n3) ==
             checked_add(checked_mul(p.alpha_p, n1), checked_mul(p.beta, n2));
}

HerzogData herzog_parameters(const Semigroup& s) {
  if (s.embedding_dimension() != 3) {
    fail(errc::precondition_failed,
         to_string(s) + " is not 3-generated");
  }
  if (s.is_symmetric()) {
    fail(errc::symmetric_input,
         to_string(s) + " is symmetric; its defining ideal is not of the "
                        "expected binomial shape");
  }
  const std::int64_t n1 = s.generators()[0];
  const std::int64_t n2 = s.generators()[1];
  const std::int64_t n3 = s.generators()[2];

  HerzogData p;
  p.c1 = minimal_degree(n1, n2, n3);
  p.c2 = minimal_degree(n2, n1, n3);
  p.c3 = minimal_degree(n3, n1, n2);

  const Decomposition d1 =
      unique_positive_decomposition(checked_mul(p.c1, n1), n2, n3, s);
  p.beta_p = d1.x;
  p.gamma = d1.y;
  const Decomposition d2 =
      unique_positive_decomposition(checked_mul(p.c2, n2), n1, n3, s);
  p.alpha = d2.x;
  p.gamma_p = d2.y;
  const Decomposition d3 =
      unique_positive_decomposition(checked_mul(p.c3, n3), n1, n2, s);
  p.alpha_p = d3.x;
  p.beta = d3.y;

  if (p.c1 != p.alpha + p.alpha_p || p.c2 != p.beta + p.beta_p ||
      p.c3 != p.gamma + p.gamma_p) {
    fail(errc::internal_inconsistency,
         "column degrees disagree with exponent sums for " + to_string(s));
  }
  assert_degree_identities(p, n1, n2, n3, errc::internal_inconsistency);
  return p;
}

HerzogData matrix_main(std::int64_t a, std::int64_t d, Enforce enforce) {
  closed_forms::FamilyParams fp;
  if (enforce == Enforce::strict) {
    if (a < 3 || d < 2) {
      fail(errc::precondition_failed, "requires a >= 3 and d >= 2");
    }
    if (std::gcd(a, d) != 1) {
      fail(errc::precondition_failed,
           "gcd(a,d) = " + std::to_string(std::gcd(a, d)) + ", not 1");
    }
    fp = closed_forms::gap_decompose(a, d);
    if (fp.r < 1 || fp.r > d - 1) {
      fail(errc::precondition_failed, "remainder outside [1, d-1]");
    }
    if (fp.q + fp.r < d - 2) {
      fail(errc::precondition_failed, "q + r < d - 2");
    }
  } else {
    fp = closed_forms::gap_decompose(a, d);
  }
  HerzogData p;
  p.alpha = d - 1;
  p.beta = d - fp.r;
  p.gamma = fp.q;
  p.alpha_p = fp.q + fp.r + 2 - d;
  p.beta_p = fp.r;
  p.gamma_p = 1;
  p = with_column_degrees(p);
  assert_degree_identities(p, a, a + 1, checked_add(a, d),
                           enforce == Enforce::strict
                               ? errc::internal_inconsistency
                               : errc::precondition_failed);
  return p;
}

HerzogData matrix_qr1(std::int64_t d) {
  if (d < 5) {
    fail(errc::precondition_failed,
         "matrix_qr1 needs d >= 5, got " + std::to_string(d));
  }
  HerzogData p;
  switch (d % 3) {
    case 0:
      p.alpha = 2;
      p.beta = exact_div(2 * d, 3);
      p.gamma = 1;
      p.alpha_p = 1;
      p.beta_p = 1;
      p.gamma_p = exact_div(d, 3);
      break;
    case 1:
      p.alpha = 0;  // unit entry in the matrix
      p.beta = exact_div(2 * d - 2, 3);
      p.gamma = 1;
      p.alpha_p = 3;
      p.beta_p = 1;
      p.gamma_p = exact_div(d + 2, 3);
      break;
    default:
      p.alpha = 1;
      p.beta = exact_div(2 * d - 1, 3);
      p.gamma = 1;
      p.alpha_p = 2;
      p.beta_p = 1;
      p.gamma_p = exact_div(d + 1, 3);
      break;
  }
  p = with_column_degrees(p);
  assert_degree_identities(p, d + 1, d + 2, 2 * d + 1,
                           errc::internal_inconsistency);
  return p;
}

std::int64_t frobenius_from_parameters(const Semigroup& s,
                                       const HerzogData& p) {
  if (s.embedding_dimension() != 3) {
    fail(errc::precondition_failed, to_string(s) + " is not 3-generated");
  }
  const std::int64_t n1 = s.generators()[0];
  const std::int64_t n2 = s.generators()[1];
  const std::int64_t n3 = s.generators()[2];
  const std::int64_t lhs = checked_mul(p.beta_p, n2);
  const std::int64_t rhs = checked_mul(p.alpha, n1);
  if (lhs == rhs) {
    fail(errc::tie_undefined,
         "beta' n2 = alpha n1 = " + std::to_string(lhs) + " for " +
             to_string(s) + "; no closed form applies");
  }
  const std::int64_t lead = std::max(lhs, rhs);
  return checked_sub(
      checked_add(lead, checked_mul(p.c3, n3)),
      checked_add(checked_add(n1, n2), n3));
}

std::int64_t genus_from_parameters(const Semigroup& s, const HerzogData& p) {
  const std::int64_t f = frobenius_from_parameters(s, p);  // also handles tie
  const std::int64_t lhs = checked_mul(p.beta_p, s.generators()[1]);
  const std::int64_t rhs = checked_mul(p.alpha, s.generators()[0]);
  const std::int64_t product =
      lhs > rhs ? checked_mul(checked_mul(p.alpha, p.beta), p.gamma)
                : checked_mul(checked_mul(p.alpha_p, p.beta_p), p.gamma_p);
  return exact_div(checked_add(product, checked_add(f, 1)), 2,
                   errc::internal_inconsistency);
}

bool graded_cm_oracle(const Semigroup& s) {
  const std::int64_t n1 = s.multiplicity();
  const AperyTable table = s.apery(n1);
  const auto ord = s.order_table(checked_add(table.max(), n1));
  for (std::int64_t w : table.omegas) {
    if (ord[static_cast<std::size_t>(w + n1)] !=
        ord[static_cast<std::size_t>(w)] + 1) {
      return false;
    }
  }
  return true;
}

CmStatus graded_cm_from_parameters(const HerzogData& p) {
  const std::int64_t lhs = checked_add(p.beta, p.beta_p);
  const std::int64_t rhs = checked_add(p.alpha, p.gamma_p);
  if (lhs == rhs) return CmStatus::cm;
  if (lhs > rhs) return CmStatus::not_cm;
  return CmStatus::undetermined;
}

const char* cm_status_name(CmStatus status) {
  switch (status) {
    case CmStatus::cm: return "CM";
    case CmStatus::not_cm: return "NotCM";
    case CmStatus::undetermined: return "Undetermined";
  }
  return "?";
}

}  // namespace numsgp::herzog
