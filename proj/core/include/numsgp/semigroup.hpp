#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <ostream>
#include <string>
#include <vector>

#include "numsgp/errors.hpp"

namespace numsgp {

// Upper bound accepted for a generator. Defaults to 2^30 so that every
// quadratic intermediate (the formulas reach O(a^2)) stays inside int64.
// The bound can only be lowered, never raised.
std::int64_t generator_cap();
void set_generator_cap(std::int64_t cap);

inline constexpr std::int64_t kDefaultGeneratorCap = std::int64_t{1} << 30;

// Apery table of a semigroup with respect to a nonzero element h:
// omegas[i] is the least element of the semigroup congruent to i mod h.
struct AperyTable {
  std::int64_t base = 0;
  std::vector<std::int64_t> omegas;

  std::int64_t max() const;
  std::int64_t sum() const;  // checked
};

// A numerical semigroup given by its minimal generating set.
//
// Construction validates the generator list: positive entries, gcd 1, and no
// generator representable by the others. Duplicates are dropped; anything
// else wrong is an error rather than a silent normalization, because the
// closed forms downstream assume minimal generation.
//
// Values are immutable after construction. The minimal-element-per-residue
// table used by contains() is computed at most once (std::call_once) and then
// shared by copies, so instances are safe to read from many threads at once.
class Semigroup {
 public:
  explicit Semigroup(std::vector<std::int64_t> generators);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  std::int64_t multiplicity() const { return gens_.front(); }
  int embedding_dimension() const { return static_cast<int>(gens_.size()); }

  // Membership. Negative integers are never members.
  bool contains(std::int64_t n) const;

  // Apery table with respect to h (h must be a nonzero element).
  // Single-source shortest paths on the residue graph mod h, where each
  // generator g contributes edges i -> (i+g) mod h of weight g.
  AperyTable apery(std::int64_t h) const;

  // Largest integer not in the semigroup; -1 if the semigroup is all of N.
  std::int64_t frobenius() const;

  std::vector<std::int64_t> gaps() const;
  std::int64_t genus() const;  // gap count

  // (1/h) * sum(Apery(h)) - (h-1)/2. Must agree with genus(); the division
  // is exact and asserted.
  std::int64_t genus_by_apery(std::int64_t h) const;

  // Largest number of generators (with repetition) summing to n; the
  // valuation of n in the associated graded ring.
  std::int64_t order(std::int64_t n) const;

  // order() for every element in [0, limit]; -1 marks non-members.
  std::vector<std::int32_t> order_table(std::int64_t limit) const;

  bool is_symmetric() const;

  friend bool operator==(const Semigroup& x, const Semigroup& y) {
    return x.gens_ == y.gens_;
  }

 private:
  struct ResidueCache {
    std::once_flag once;
    std::vector<std::int64_t> minimal;  // minimal element per residue mod n1
  };

  const std::vector<std::int64_t>& residue_table() const;

  std::vector<std::int64_t> gens_;
  std::shared_ptr<ResidueCache> cache_;
};

std::string to_string(const Semigroup& s);
std::ostream& operator<<(std::ostream& os, const Semigroup& s);

namespace detail {

// Minimal element of the monoid generated by `gens` in each residue class
// mod h (INT64_MAX where the class is unreachable; gcd(gens) need not be 1).
std::vector<std::int64_t> residue_minima(const std::vector<std::int64_t>& gens,
                                         std::int64_t h);

// Is n a nonnegative integer combination of `gens`? Works for any positive
// generator list, minimal or not, coprime or not.
bool monoid_contains(const std::vector<std::int64_t>& gens, std::int64_t n);

// Drop every generator representable by smaller kept ones. The result
// minimally generates the same monoid.
std::vector<std::int64_t> minimalize(std::vector<std::int64_t> gens);

}  // namespace detail

}  // namespace numsgp
