#include "numsgp/closed_forms.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "numsgp/errors.hpp"

namespace cf = numsgp::closed_forms;
using numsgp::Enforce;
using numsgp::errc;
using numsgp::Error;
using numsgp::Semigroup;

namespace {

TEST(FamilyDecompose, SpecExamples) {
  const cf::FamilyParams p = cf::family_decompose(5, 13);
  EXPECT_EQ(p.q, 2);
  EXPECT_EQ(p.r, 3);
  EXPECT_EQ(cf::family_decompose(7, 9).q, 1);
  EXPECT_EQ(cf::family_decompose(7, 9).r, 2);
  EXPECT_EQ(cf::family_decompose(7, 12).q, 1);
  EXPECT_EQ(cf::family_decompose(7, 12).r, 5);
}

TEST(FamilyDecompose, RejectsInvalidTriples) {
  EXPECT_THROW(cf::family_decompose(5, 10), Error);   // multiple of a
  EXPECT_THROW(cf::family_decompose(5, 6), Error);    // b must exceed a+1
  EXPECT_THROW(cf::family_decompose(2, 7), Error);    // <2,3,b> never minimal
  EXPECT_THROW(cf::family_decompose(7, 15), Error);   // 15 = 7 + 8
}

TEST(FamilyDecompose, InequalitiesHoldOnSweep) {
  for (std::int64_t a = 3; a <= 60; ++a) {
    for (std::int64_t b = a + 2; b <= 5 * a; ++b) {
      if (!cf::family_is_minimal(a, b)) continue;
      const cf::FamilyParams p = cf::family_decompose(a, b);
      EXPECT_EQ(p.a * p.q + p.r, b);
      EXPECT_LT(p.q, p.r);
      EXPECT_LT(b, p.r * (a + 1));
    }
  }
}

TEST(FamilyIsMinimal, MatchesConstructorVerdict) {
  for (std::int64_t a = 3; a <= 25; ++a) {
    for (std::int64_t b = a + 2; b <= 6 * a; ++b) {
      bool constructed = true;
      try {
        Semigroup s({a, a + 1, b});
      } catch (const Error&) {
        constructed = false;
      }
      EXPECT_EQ(cf::family_is_minimal(a, b), constructed) << a << " " << b;
    }
  }
}

TEST(AperyIncreasing, SpecExamples) {
  EXPECT_EQ(cf::apery_increasing_formula(5, 13, 4), 19);
  EXPECT_EQ(cf::apery_increasing_formula(5, 13, 0), 0);
  EXPECT_EQ(cf::apery_increasing_formula(5, 13, 3), 13);
  EXPECT_THROW(cf::apery_increasing_formula(5, 13, 5), Error);
  EXPECT_THROW(cf::apery_increasing_formula(5, 13, -1), Error);
}

TEST(AperyIncreasing, ExactOnIncreasingInstances) {
  // The hypothesis must come from the oracle, never be assumed. On the
  // instances where the oracle table is strictly increasing the formula is
  // exact for every index.
  std::int64_t increasing = 0, other = 0;
  for (std::int64_t a = 3; a <= 40; ++a) {
    for (std::int64_t b = a + 2; b <= 5 * a; ++b) {
      if (!cf::family_is_minimal(a, b)) continue;
      const numsgp::AperyTable oracle = Semigroup({a, a + 1, b}).apery(a);
      if (!cf::apery_is_increasing(oracle)) {
        ++other;
        continue;
      }
      ++increasing;
      for (std::int64_t i = 0; i < a; ++i) {
        ASSERT_EQ(cf::apery_increasing_formula(a, b, i),
                  oracle.omegas[static_cast<std::size_t>(i)])
            << a << " " << b << " " << i;
      }
    }
  }
  EXPECT_GT(increasing, 0);
  EXPECT_GT(other, 0);
}

TEST(AperyIncreasing, FormulaCanFailWithoutTheHypothesis) {
  // <6,7,11>: oracle table is 0,7,14,21,22,11 (not increasing) and the
  // formula is wrong at i = 4.
  const numsgp::AperyTable oracle = Semigroup({6, 7, 11}).apery(6);
  EXPECT_FALSE(cf::apery_is_increasing(oracle));
  EXPECT_EQ(cf::apery_increasing_formula(6, 11, 4), 28);
  EXPECT_EQ(oracle.omegas[4], 22);
}

TEST(AperyMin, SpecExamples) {
  EXPECT_EQ(cf::apery_min_formula(5, 13, 2), 12);
  EXPECT_EQ(cf::apery_min_formula(5, 13, 4), 19);
  EXPECT_EQ(cf::apery_min_formula(5, 13, 1), 6);
  EXPECT_THROW(cf::apery_min_formula(5, 13, 7), Error);
}

TEST(AperyMin, UnconditionalOnSweep) {
  for (std::int64_t a = 3; a <= 48; ++a) {
    for (std::int64_t b = a + 2; b <= 5 * a; ++b) {
      if (!cf::family_is_minimal(a, b)) continue;
      const numsgp::AperyTable oracle = Semigroup({a, a + 1, b}).apery(a);
      for (std::int64_t i = 0; i < a; ++i) {
        ASSERT_EQ(cf::apery_min_formula(a, b, i),
                  oracle.omegas[static_cast<std::size_t>(i)])
            << a << " " << b << " " << i;
      }
    }
  }
}

TEST(FrobeniusSpecialB, SpecExamples) {
  EXPECT_EQ(cf::frobenius_special_b(5, 2), 14);  // <5,6,13>
  EXPECT_EQ(cf::frobenius_special_b(7, 1), 20);  // <7,8,9>
  EXPECT_EQ(cf::frobenius_special_b(4, 1), 7);   // <4,5,6>
  EXPECT_THROW(cf::frobenius_special_b(5, 0), Error);
  EXPECT_THROW(cf::frobenius_special_b(5, 5), Error);
  EXPECT_THROW(cf::frobenius_special_b(5, 4), Error);  // b = 25 is redundant
}

TEST(FrobeniusSpecialB, MatchesOracle) {
  for (std::int64_t a = 3; a <= 40; ++a) {
    for (std::int64_t q = 1; q + 1 < a; ++q) {
      const std::int64_t b = a * q + q + 1;
      EXPECT_EQ(cf::frobenius_special_b(a, q),
                Semigroup({a, a + 1, b}).frobenius())
          << a << " " << q;
    }
  }
}

TEST(AperySmallD, SpecExamples) {
  EXPECT_EQ(cf::apery_small_d(7, 5, 5), 12);
  EXPECT_EQ(cf::apery_small_d(7, 5, 0), 0);
  EXPECT_EQ(cf::apery_small_d(10, 5, 9), 59);
  EXPECT_THROW(cf::apery_small_d(9, 5, 1), Error);  // 9 < 5^2 - 15
  EXPECT_THROW(cf::apery_small_d(7, 5, 7), Error);
}

TEST(FrobeniusSmallD, SpecExamples) {
  EXPECT_EQ(cf::frobenius_small_d(7, 5), 25);
  EXPECT_EQ(cf::frobenius_small_d(10, 5), 49);
  EXPECT_EQ(cf::frobenius_small_d(7, 3), 19);
}

TEST(FrobeniusSmallD, MatchesOracleIncludingThresholdEquality) {
  std::int64_t at_threshold = 0;
  for (std::int64_t d = 2; d <= 9; ++d) {
    for (std::int64_t a = d + 1; a <= 90; ++a) {
      if (a < d * d - 3 * d) continue;
      if (a == d * d - 3 * d) ++at_threshold;
      const Semigroup h({a, a + 1, a + d});
      const numsgp::AperyTable oracle = h.apery(a);
      for (std::int64_t i = 0; i < a; ++i) {
        ASSERT_EQ(cf::apery_small_d(a, d, i),
                  oracle.omegas[static_cast<std::size_t>(i)])
            << a << " " << d << " " << i;
      }
      ASSERT_EQ(cf::frobenius_small_d(a, d), h.frobenius()) << a << " " << d;
    }
  }
  // The statement is inclusive at a = d^2 - 3d; make sure the sweep actually
  // exercised that boundary rather than assuming it.
  EXPECT_GT(at_threshold, 0);
}

TEST(FrobeniusSmallD, PermissiveEvaluationBelowThresholdCanMismatch) {
  // d=6, a=7 sits below the a >= d^2-3d threshold. The permissive value
  // exists but disagrees with the oracle (omega_5 is 26, the formula says 40).
  const Semigroup h({7, 8, 13});
  EXPECT_THROW(cf::apery_small_d(7, 6, 5), Error);
  EXPECT_EQ(cf::apery_small_d(7, 6, 5, Enforce::permissive), 40);
  EXPECT_EQ(h.apery(7).omegas[5], 26);
  EXPECT_NE(cf::frobenius_small_d(7, 6, Enforce::permissive), h.frobenius());
}

TEST(FrobeniusD5, SpecExamples) {
  EXPECT_EQ(cf::frobenius_d5(7), 25);
  EXPECT_EQ(cf::frobenius_d5(9), 35);
  EXPECT_EQ(cf::frobenius_d5(11), 53);
  EXPECT_THROW(cf::frobenius_d5(6), Error);
}

TEST(FrobeniusD5, AgreesWithSmallDWherePreconditionsOverlap) {
  for (std::int64_t a = 10; a <= 150; ++a) {
    EXPECT_EQ(cf::frobenius_d5(a), cf::frobenius_small_d(a, 5)) << a;
  }
}

TEST(FrobeniusMain, SpecExamples) {
  EXPECT_EQ(cf::frobenius_main(7, 3), 19);
  EXPECT_EQ(cf::frobenius_main(5, 3), 9);
  EXPECT_EQ(cf::frobenius_main(8, 3), 23);
}

TEST(FrobeniusMain, PrecheckNamesTheViolatedCondition) {
  EXPECT_NE(cf::main_precheck(6, 3).violated.find("gcd"), std::string::npos);
  EXPECT_NE(cf::main_precheck(5, 4).violated.find("symmetric"),
            std::string::npos);
  EXPECT_NE(cf::main_precheck(31, 7).violated.find("q + r"), std::string::npos);
  EXPECT_TRUE(cf::main_precheck(7, 3).ok);
  try {
    cf::frobenius_main(6, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), errc::precondition_failed);
  }
}

TEST(FrobeniusMain, MatchesOracleOnQualifyingInstances) {
  std::int64_t checked = 0;
  for (std::int64_t a = 3; a <= 80; ++a) {
    for (std::int64_t d = 2; d < a; ++d) {
      const cf::MainPrecheck pre = cf::main_precheck(a, d);
      if (!pre.ok) continue;
      ++checked;
      ASSERT_EQ(cf::frobenius_main(a, d), Semigroup({a, a + 1, a + d}).frobenius())
          << a << " " << d;
    }
  }
  EXPECT_GT(checked, 300);
}

TEST(FrobeniusMain, AgreesWithSmallDAndPeaksAtLastIndex) {
  // Where a > d^2 - 3d strictly and the main form applies, the small-gap
  // table peaks at i = a-1 and both Frobenius values coincide.
  for (std::int64_t a = 3; a <= 90; ++a) {
    for (std::int64_t d = 2; d < a; ++d) {
      if (a <= d * d - 3 * d) continue;
      if (!cf::main_precheck(a, d).ok) continue;
      const std::int64_t f_small = cf::frobenius_small_d(a, d);
      EXPECT_EQ(f_small, cf::frobenius_main(a, d)) << a << " " << d;
      EXPECT_EQ(f_small, cf::apery_small_d(a, d, a - 1) - a) << a << " " << d;
    }
  }
}

TEST(FrobeniusQr1, SpecExamples) {
  EXPECT_EQ(cf::frobenius_qr1(5), 16);  // <6,7,11>
  EXPECT_EQ(cf::frobenius_qr1(6), 25);  // <7,8,13>
  EXPECT_EQ(cf::frobenius_qr1(7), 37);  // <8,9,15>
  EXPECT_THROW(cf::frobenius_qr1(4), Error);
}

TEST(FrobeniusQr1, MatchesOracle) {
  for (std::int64_t d = 5; d <= 40; ++d) {
    EXPECT_EQ(cf::frobenius_qr1(d),
              Semigroup({d + 1, d + 2, 2 * d + 1}).frobenius())
        << d;
  }
}

}  // namespace
