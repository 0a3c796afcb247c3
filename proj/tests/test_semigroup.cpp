#include "numsgp/semigroup.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <thread>

#include "naive_oracles.hpp"
#include "numsgp/errors.hpp"

using numsgp::AperyTable;
using numsgp::errc;
using numsgp::Error;
using numsgp::Semigroup;

namespace {

void expect_error(std::vector<std::int64_t> gens, errc expected) {
  try {
    Semigroup s(std::move(gens));
    FAIL() << "expected " << numsgp::errc_name(expected) << ", got " << s;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), expected) << e.what();
  }
}

// Every minimal 3-generated semigroup with generators below the bounds.
std::vector<Semigroup> small_triples(std::int64_t n1_max, std::int64_t gen_max) {
  std::vector<Semigroup> out;
  for (std::int64_t n1 = 2; n1 <= n1_max; ++n1) {
    for (std::int64_t n2 = n1 + 1; n2 <= gen_max; ++n2) {
      if (n2 % n1 == 0) continue;
      for (std::int64_t n3 = n2 + 1; n3 <= gen_max; ++n3) {
        if (std::gcd(std::gcd(n1, n2), n3) != 1) continue;
        if (numsgp::detail::monoid_contains({n1, n2}, n3)) continue;
        out.emplace_back(std::vector<std::int64_t>{n1, n2, n3});
      }
    }
  }
  return out;
}

TEST(Construction, AcceptsSpecExamples) {
  const Semigroup a({2, 3});
  EXPECT_EQ(a.multiplicity(), 2);
  EXPECT_EQ(a.embedding_dimension(), 2);

  const Semigroup b({5, 6, 8});
  EXPECT_EQ(b.multiplicity(), 5);
  EXPECT_EQ(b.embedding_dimension(), 3);
}

TEST(Construction, RejectsBadInput) {
  expect_error({4, 6, 8}, errc::gcd_not_one);
  expect_error({2}, errc::gcd_not_one);
  expect_error({5, 6, 11}, errc::not_minimal);  // 11 = 5 + 6
  expect_error({3, 4, 5, 6}, errc::not_minimal);
  expect_error({}, errc::precondition_failed);
  expect_error({0, 3}, errc::precondition_failed);
  expect_error({-2, 3}, errc::precondition_failed);
}

TEST(Construction, GcdErrorNamesTheGcd) {
  try {
    Semigroup s({4, 6, 8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("gcd is 2"), std::string::npos);
  }
}

TEST(Construction, NotMinimalNamesTheGenerator) {
  try {
    Semigroup s({5, 6, 11});
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("11"), std::string::npos);
  }
}

TEST(Construction, DeduplicatesButStaysStrict) {
  const Semigroup s({3, 5, 3, 7});
  EXPECT_EQ(s.generators(), (std::vector<std::int64_t>{3, 5, 7}));
}

TEST(Construction, RespectsGeneratorCap) {
  expect_error({2, numsgp::kDefaultGeneratorCap + 1}, errc::overflow);
  numsgp::set_generator_cap(100);
  expect_error({2, 101}, errc::overflow);
  numsgp::set_generator_cap(numsgp::kDefaultGeneratorCap);
  const Semigroup ok({2, 101});
  EXPECT_EQ(ok.generators().back(), 101);
}

TEST(Construction, WholeNumbersIsRepresentable) {
  const Semigroup n({1});
  EXPECT_EQ(n.frobenius(), -1);
  EXPECT_EQ(n.genus(), 0);
  EXPECT_TRUE(n.gaps().empty());
  EXPECT_TRUE(n.is_symmetric());
}

TEST(Contains, SpecExamples) {
  const Semigroup h({5, 6, 8});
  EXPECT_FALSE(h.contains(9));
  EXPECT_TRUE(h.contains(0));
  EXPECT_TRUE(h.contains(19));  // 5 + 6 + 8
  EXPECT_FALSE(h.contains(-4));
}

TEST(Contains, MatchesNaiveDp) {
  const Semigroup h({7, 9, 11});
  const auto member = naive::members_up_to({7, 9, 11}, 120);
  for (std::int64_t n = 0; n <= 120; ++n) {
    EXPECT_EQ(h.contains(n), member[static_cast<std::size_t>(n)] != 0) << n;
  }
}

TEST(Apery, SpecExamples) {
  EXPECT_EQ(Semigroup({2, 3}).apery(2).omegas,
            (std::vector<std::int64_t>{0, 3}));
  EXPECT_EQ(Semigroup({5, 6, 13}).apery(5).omegas,
            (std::vector<std::int64_t>{0, 6, 12, 13, 19}));
  EXPECT_EQ(Semigroup({6, 7, 11}).apery(6).omegas,
            (std::vector<std::int64_t>{0, 7, 14, 21, 22, 11}));
}

TEST(Apery, RejectsNonElements) {
  const Semigroup h({5, 6, 13});
  for (std::int64_t bad : {-5, 0, 4, 9}) {
    EXPECT_THROW(h.apery(bad), Error) << bad;
  }
}

TEST(Apery, InvariantsOnSmallTriples) {
  for (const Semigroup& h : small_triples(9, 25)) {
    const std::int64_t n1 = h.multiplicity();
    for (std::int64_t base = 1; base <= 3 * n1; ++base) {
      if (!h.contains(base)) continue;
      const AperyTable table = h.apery(base);
      ASSERT_EQ(table.omegas.size(), static_cast<std::size_t>(base));
      EXPECT_EQ(table.omegas[0], 0);
      for (std::int64_t i = 1; i < base; ++i) {
        const std::int64_t w = table.omegas[static_cast<std::size_t>(i)];
        EXPECT_EQ(w % base, i);
        EXPECT_TRUE(h.contains(w));
        EXPECT_FALSE(h.contains(w - base));
      }
    }
  }
}

TEST(Apery, MatchesNaiveScan) {
  for (const Semigroup& h : small_triples(8, 21)) {
    EXPECT_EQ(h.apery(h.multiplicity()).omegas,
              naive::apery(h.generators(), h.multiplicity()))
        << h;
  }
}

TEST(Frobenius, SpecExamples) {
  EXPECT_EQ(Semigroup({2, 3}).frobenius(), 1);
  EXPECT_EQ(Semigroup({5, 6, 13}).frobenius(), 14);
  EXPECT_EQ(Semigroup({7, 8, 12}).frobenius(), 25);
}

TEST(Frobenius, BoundaryProperties) {
  for (const Semigroup& h : small_triples(9, 24)) {
    const std::int64_t f = h.frobenius();
    EXPECT_FALSE(h.contains(f));
    for (std::int64_t k = 1; k <= h.multiplicity(); ++k) {
      EXPECT_TRUE(h.contains(f + k));
    }
  }
}

TEST(Gaps, SpecExamples) {
  EXPECT_EQ(Semigroup({2, 3}).gaps(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(Semigroup({2, 3}).genus(), 1);
  EXPECT_EQ(Semigroup({7, 8, 10}).genus(), 11);
  EXPECT_EQ(Semigroup({6, 7, 11}).genus(), 10);
}

TEST(GenusByApery, SpecExamples) {
  EXPECT_EQ(Semigroup({2, 3}).genus_by_apery(2), 1);
  EXPECT_EQ(Semigroup({5, 6, 13}).genus_by_apery(5), 8);
  // The Apery sum of <7,8,12> mod 7 is 112, and 112/7 - 3 = 13, agreeing
  // with direct gap enumeration.
  EXPECT_EQ(Semigroup({7, 8, 12}).genus_by_apery(7), 13);
  EXPECT_EQ(Semigroup({7, 8, 12}).genus(), 13);
}

TEST(GenusByApery, AgreesWithGapsForEveryBase) {
  for (const Semigroup& h : small_triples(8, 22)) {
    const std::int64_t g = h.genus();
    for (std::int64_t base = 1; base <= 3 * h.multiplicity(); ++base) {
      if (!h.contains(base)) continue;
      EXPECT_EQ(h.genus_by_apery(base), g) << h << " base " << base;
    }
  }
}

TEST(TwoGenerated, ClosedFormsForAllCoprimePairs) {
  for (std::int64_t a = 2; a <= 40; ++a) {
    for (std::int64_t b = a + 1; b <= 40; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const Semigroup h({a, b});
      EXPECT_EQ(h.frobenius(), a * b - a - b);
      EXPECT_EQ(h.genus(), (a - 1) * (b - 1) / 2);
      EXPECT_TRUE(h.is_symmetric());
    }
  }
}

TEST(Order, SpecExamples) {
  const Semigroup h({6, 7, 11});
  EXPECT_EQ(h.order(0), 0);
  EXPECT_EQ(h.order(22), 2);  // 11 + 11
  EXPECT_EQ(h.order(28), 4);  // 7 * 4
  EXPECT_THROW(h.order(5), Error);
}

TEST(Order, MatchesNaiveAndSuperadditive) {
  for (const Semigroup& h : small_triples(7, 18)) {
    const std::int64_t limit = 4 * h.multiplicity();
    std::vector<std::int64_t> elements;
    for (std::int64_t n = 0; n <= limit; ++n) {
      if (h.contains(n)) {
        EXPECT_EQ(h.order(n), naive::order(h.generators(), n)) << h << " " << n;
        elements.push_back(n);
      }
    }
    for (std::int64_t x : elements) {
      for (std::int64_t y : elements) {
        if (x + y > limit) continue;
        EXPECT_LE(h.order(x) + h.order(y), h.order(x + y));
      }
    }
  }
}

TEST(Symmetry, SpecExamples) {
  EXPECT_TRUE(Semigroup({2, 3}).is_symmetric());
  EXPECT_FALSE(Semigroup({7, 8, 10}).is_symmetric());
  EXPECT_FALSE(Semigroup({3, 4, 5}).is_symmetric());
  EXPECT_TRUE(Semigroup({4, 5, 6}).is_symmetric());
}

TEST(Concurrency, SharedReadsAreConsistent) {
  const Semigroup h({101, 103, 107});
  const std::int64_t expected_f = h.frobenius();
  std::vector<std::thread> pool;
  std::vector<std::int64_t> results(8, 0);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      const Semigroup copy = h;  // shares the residue cache
      std::int64_t acc = copy.frobenius();
      for (std::int64_t n = 0; n < 500; ++n) {
        acc += copy.contains(n) ? 1 : 0;
      }
      results[static_cast<std::size_t>(t)] = acc;
    });
  }
  for (auto& worker : pool) worker.join();
  for (int t = 1; t < 8; ++t) {
    EXPECT_EQ(results[static_cast<std::size_t>(t)], results[0]);
  }
  EXPECT_EQ(h.frobenius(), expected_f);
}

}  // namespace
