#include "numsgp/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>

#include "numsgp/checked.hpp"

namespace numsgp {

namespace {

std::atomic<std::int64_t> g_generator_cap{kDefaultGeneratorCap};

// Dense order table sizes beyond this are almost certainly a misuse of the
// brute-force oracles; refuse instead of thrashing memory.
constexpr std::int64_t kOrderTableLimit = std::int64_t{1} << 26;

}  // namespace

std::int64_t generator_cap() { return g_generator_cap.load(); }

void set_generator_cap(std::int64_t cap) {
  if (cap < 2 || cap > kDefaultGeneratorCap) {
    fail(errc::precondition_failed,
         "generator cap must lie in [2, 2^30], got " + std::to_string(cap));
  }
  g_generator_cap.store(cap);
}

std::int64_t AperyTable::max() const {
  return *std::max_element(omegas.begin(), omegas.end());
}

std::int64_t AperyTable::sum() const {
  std::int64_t total = 0;
  for (std::int64_t w : omegas) total = checked_add(total, w);
  return total;
}

namespace detail {

std::vector<std::int64_t> residue_minima(const std::vector<std::int64_t>& gens,
                                         std::int64_t h) {
  const std::int64_t inf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(static_cast<std::size_t>(h), inf);
  dist[0] = 0;

  using Node = std::pair<std::int64_t, std::int64_t>;  // (distance, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<Node>> heap;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, i] = heap.top();
    heap.pop();
    if (d != dist[static_cast<std::size_t>(i)]) continue;
    for (std::int64_t g : gens) {
      if (g % h == 0) continue;
      const std::int64_t j = (i + g) % h;
      const std::int64_t nd = checked_add(d, g);
      if (nd < dist[static_cast<std::size_t>(j)]) {
        dist[static_cast<std::size_t>(j)] = nd;
        heap.emplace(nd, j);
      }
    }
  }
  return dist;
}

bool monoid_contains(const std::vector<std::int64_t>& gens, std::int64_t n) {
  if (n < 0) return false;
  if (n == 0) return true;
  if (gens.empty()) return false;
  const std::int64_t h = *std::min_element(gens.begin(), gens.end());
  const auto minima = residue_minima(gens, h);
  return minima[static_cast<std::size_t>(n % h)] <= n;
}

std::vector<std::int64_t> minimalize(std::vector<std::int64_t> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<std::int64_t> kept;
  for (std::int64_t g : gens) {
    if (kept.empty() || !monoid_contains(kept, g)) kept.push_back(g);
  }
  return kept;
}

}  // namespace detail

Semigroup::Semigroup(std::vector<std::int64_t> generators)
    : gens_(std::move(generators)), cache_(std::make_shared<ResidueCache>()) {
  if (gens_.empty()) {
    fail(errc::precondition_failed, "generator list is empty");
  }
  for (std::int64_t g : gens_) {
    if (g <= 0) {
      fail(errc::precondition_failed,
           "generators must be positive, got " + std::to_string(g));
    }
    if (g > generator_cap()) {
      fail(errc::overflow, "generator " + std::to_string(g) +
                               " exceeds the configured cap " +
                               std::to_string(generator_cap()));
    }
  }
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  std::int64_t g = 0;
  for (std::int64_t x : gens_) g = std::gcd(g, x);
  if (g != 1) {
    fail(errc::gcd_not_one, "gcd is " + std::to_string(g));
  }

  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::vector<std::int64_t> others;
    others.reserve(gens_.size() - 1);
    for (std::size_t j = 0; j < gens_.size(); ++j) {
      if (j != i) others.push_back(gens_[j]);
    }
    if (!others.empty() && detail::monoid_contains(others, gens_[i])) {
      fail(errc::not_minimal, "generator " + std::to_string(gens_[i]) +
                                  " is redundant: it is a combination of the "
                                  "remaining generators");
    }
  }
}

const std::vector<std::int64_t>& Semigroup::residue_table() const {
  std::call_once(cache_->once, [this] {
    cache_->minimal = detail::residue_minima(gens_, multiplicity());
  });
  return cache_->minimal;
}

bool Semigroup::contains(std::int64_t n) const {
  if (n < 0) return false;
  if (n == 0) return true;
  const auto& table = residue_table();
  return table[static_cast<std::size_t>(n % multiplicity())] <= n;
}

AperyTable Semigroup::apery(std::int64_t h) const {
  if (h <= 0 || !contains(h)) {
    fail(errc::not_an_element,
         std::to_string(h) + " is not a nonzero element of " + to_string(*this));
  }
  AperyTable table;
  table.base = h;
  if (h == multiplicity()) {
    table.omegas = residue_table();
  } else {
    table.omegas = detail::residue_minima(gens_, h);
  }
  return table;
}

std::int64_t Semigroup::frobenius() const {
  return apery(multiplicity()).max() - multiplicity();
}

std::vector<std::int64_t> Semigroup::gaps() const {
  std::vector<std::int64_t> out;
  const std::int64_t f = frobenius();
  for (std::int64_t n = 1; n <= f; ++n) {
    if (!contains(n)) out.push_back(n);
  }
  return out;
}

std::int64_t Semigroup::genus() const {
  std::int64_t count = 0;
  const std::int64_t f = frobenius();
  for (std::int64_t n = 1; n <= f; ++n) {
    if (!contains(n)) ++count;
  }
  return count;
}

std::int64_t Semigroup::genus_by_apery(std::int64_t h) const {
  const AperyTable table = apery(h);
  // g = (1/h) sum(omega) - (h-1)/2, computed as (2*sum - h*(h-1)) / (2h) so
  // the whole expression stays integral; inexactness here means the Apery
  // table itself is wrong.
  const std::int64_t doubled =
      checked_sub(checked_mul(2, table.sum()), checked_mul(h, h - 1));
  return exact_div(doubled, checked_mul(2, h), errc::internal_inconsistency);
}

std::int64_t Semigroup::order(std::int64_t n) const {
  if (!contains(n)) {
    fail(errc::not_an_element,
         std::to_string(n) + " is not an element of " + to_string(*this));
  }
  if (n == 0) return 0;
  return order_table(n)[static_cast<std::size_t>(n)];
}

std::vector<std::int32_t> Semigroup::order_table(std::int64_t limit) const {
  if (limit < 0) {
    fail(errc::precondition_failed, "order_table limit must be nonnegative");
  }
  if (limit > kOrderTableLimit) {
    fail(errc::overflow,
         "order_table limit " + std::to_string(limit) + " too large");
  }
  std::vector<std::int32_t> ord(static_cast<std::size_t>(limit) + 1, -1);
  ord[0] = 0;
  for (std::int64_t m = 1; m <= limit; ++m) {
    if (!contains(m)) continue;
    std::int32_t best = -1;
    for (std::int64_t g : gens_) {
      if (g > m) break;  // generators are sorted
      const std::int32_t prev = ord[static_cast<std::size_t>(m - g)];
      if (prev >= 0 && prev + 1 > best) best = prev + 1;
    }
    // m is a nonzero element, so at least one generator g has m - g in the
    // semigroup.
    ord[static_cast<std::size_t>(m)] = best;
  }
  return ord;
}

bool Semigroup::is_symmetric() const {
  // Symmetric <=> 2 g(H) = F(H) + 1.
  return checked_mul(2, genus()) == checked_add(frobenius(), 1);
}

std::string to_string(const Semigroup& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Semigroup& s) {
  os << '<';
  const auto& gens = s.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ',';
    os << gens[i];
  }
  return os << '>';
}

}  // namespace numsgp
