// Brute-force reference implementations used only by tests. These stay
// deliberately independent of the library's algorithms: membership is a
// plain boolean DP over [0, limit], the Apery set is a linear scan per
// residue class, and order is a direct maximization. Expected values frozen
// in the tests were computed with these.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace naive {

inline std::vector<char> members_up_to(const std::vector<std::int64_t>& gens,
                                       std::int64_t limit) {
  std::vector<char> member(static_cast<std::size_t>(limit) + 1, 0);
  member[0] = 1;
  for (std::int64_t m = 1; m <= limit; ++m) {
    for (std::int64_t g : gens) {
      if (g <= m && member[static_cast<std::size_t>(m - g)]) {
        member[static_cast<std::size_t>(m)] = 1;
        break;
      }
    }
  }
  return member;
}

inline bool contains(const std::vector<std::int64_t>& gens, std::int64_t n) {
  if (n < 0) return false;
  return members_up_to(gens, n)[static_cast<std::size_t>(n)] != 0;
}

// Largest non-member, found by scanning until min(gens) consecutive members
// appear. Requires gcd(gens) = 1.
inline std::int64_t frobenius(const std::vector<std::int64_t>& gens) {
  const std::int64_t step = *std::min_element(gens.begin(), gens.end());
  std::int64_t limit = 64;
  while (true) {
    const auto member = members_up_to(gens, limit);
    std::int64_t run = 0;
    for (std::int64_t m = 0; m <= limit; ++m) {
      run = member[static_cast<std::size_t>(m)] ? run + 1 : 0;
      if (run == step) {
        std::int64_t f = -1;
        for (std::int64_t k = m; k >= 0; --k) {
          if (!member[static_cast<std::size_t>(k)]) {
            f = k;
            break;
          }
        }
        return f;
      }
    }
    limit *= 2;
  }
}

inline std::vector<std::int64_t> gaps(const std::vector<std::int64_t>& gens) {
  const std::int64_t f = frobenius(gens);
  std::vector<std::int64_t> out;
  if (f < 1) return out;
  const auto member = members_up_to(gens, f);
  for (std::int64_t m = 1; m <= f; ++m) {
    if (!member[static_cast<std::size_t>(m)]) out.push_back(m);
  }
  return out;
}

inline std::int64_t genus(const std::vector<std::int64_t>& gens) {
  return static_cast<std::int64_t>(gaps(gens).size());
}

inline std::vector<std::int64_t> apery(const std::vector<std::int64_t>& gens,
                                       std::int64_t h) {
  const std::int64_t f = frobenius(gens);
  const std::int64_t limit = f + h + 1;
  const auto member = members_up_to(gens, limit);
  std::vector<std::int64_t> omegas(static_cast<std::size_t>(h));
  for (std::int64_t i = 0; i < h; ++i) {
    std::int64_t m = i;
    while (!member[static_cast<std::size_t>(m)]) m += h;
    omegas[static_cast<std::size_t>(i)] = m;
  }
  return omegas;
}

// Largest number of generators (with repetition) summing to n; -1 if n is
// not representable.
inline std::int64_t order(const std::vector<std::int64_t>& gens,
                          std::int64_t n) {
  std::vector<std::int64_t> best(static_cast<std::size_t>(n) + 1, -1);
  best[0] = 0;
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t g : gens) {
      if (g <= m && best[static_cast<std::size_t>(m - g)] >= 0) {
        best[static_cast<std::size_t>(m)] =
            std::max(best[static_cast<std::size_t>(m)],
                     best[static_cast<std::size_t>(m - g)] + 1);
      }
    }
  }
  return best[static_cast<std::size_t>(n)];
}

}  // namespace naive
