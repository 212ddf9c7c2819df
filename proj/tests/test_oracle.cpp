#include <gtest/gtest.h>

#include "eos/error.hpp"
#include "eos/generator.hpp"
#include "eos/moment_core.hpp"
#include "eos/oracle.hpp"
#include "support.hpp"

using namespace eos;
using eos::proptest::Gen;

namespace {

DiscreteDistribution<Rational> law(std::vector<Rational> v, std::vector<Rational> m) {
  return DiscreteDistribution<Rational>(std::move(v), std::move(m));
}

}  // namespace

TEST(Oracle, TwoPointHalfAndFifteenHalves) {
  const auto x = law({Rational(-1, 2), Rational(15, 2)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(eos_exact(x, 4), proptest::rationals({0, 2, 5, 7}));
}

TEST(Oracle, SkewedTwoPoint) {
  const auto x = law({Rational(-1, 10), Rational(121, 5)}, {Rational(2, 3), Rational(1, 3)});
  EXPECT_EQ(eos_exact(x, 5), proptest::rationals({0, 1, 5, 13, 21}));
}

TEST(Oracle, ZeroOrPowerOfTwo) {
  for (int n : {4, 6, 8}) {
    const auto x = law({Rational(0), Rational(1L << n)}, {Rational(1, 2), Rational(1, 2)});
    EXPECT_EQ(eos_exact(x, n), proptest::binomial_tail_sequence(n)) << "n=" << n;
  }
}

TEST(Oracle, FairBitSpacing) {
  const auto x = law({Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(spacing_pearson(x, 2), std::vector<Rational>{Rational(1, 2)});
}

TEST(Oracle, PearsonSpacingsOfFirstExample) {
  const auto x = law({Rational(-1, 2), Rational(15, 2)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_EQ(spacing_pearson(x, 4), proptest::rationals({2, 3, 2}));
}

TEST(Oracle, SingleAtomRejectedForSpacings) {
  const auto x = law({Rational(3)}, {Rational(1)});
  EXPECT_THROW(
      {
        try {
          spacing_pearson(x, 3);
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
          throw;
        }
      },
      Error);
}

TEST(Oracle, SizeLimits) {
  const auto x = law({Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 2)});
  EXPECT_THROW(eos_exact(x, 0), Error);
  EXPECT_THROW(eos_exact(x, 65), Error);
  EXPECT_NO_THROW(eos_exact(x, 64));
}

TEST(Oracle, InvalidDistributions) {
  EXPECT_THROW(law({Rational(1), Rational(0)}, {Rational(1, 2), Rational(1, 2)}), Error);
  EXPECT_THROW(law({Rational(0), Rational(1)}, {Rational(1, 2), Rational(1, 3)}), Error);
  EXPECT_THROW(law({Rational(0), Rational(1)}, {Rational(0), Rational(1)}), Error);
}

TEST(Oracle, FloatAgreesWithExact) {
  Gen g(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = g.discrete(2, 5);
    const DiscreteDistribution<double> xf(proptest::doubles(x.values()), proptest::doubles(x.masses()));
    const int n = g.integer(1, 9);
    const auto exact = eos_exact(x, n);
    const auto approx = eos_exact(xf, n);
    for (int j = 0; j < n; ++j) {
      EXPECT_NEAR(approx[j], exact[j].get_d(), 1e-9 * std::max(1.0, std::fabs(exact[j].get_d())));
    }
  }
}

// spacing_pearson must match successive differences exactly.
TEST(OracleProperty, PearsonMatchesDifferences) {
  Gen g(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto x = g.discrete(2, 5);
    const int n = g.integer(2, 10);
    const auto eos = eos_exact(x, n);
    const auto sp = spacing_pearson(x, n);
    for (int j = 0; j + 1 < n; ++j) ASSERT_EQ(sp[j], eos[j + 1] - eos[j]);
  }
}

// E X_{k:k} read off eos_exact(x, k) agrees with muk_from_mujn(eos_exact(x, n)).
TEST(OracleProperty, TriangularConsistency) {
  Gen g(99);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = g.discrete(2, 4);
    const int n = g.integer(1, 9);
    const auto mu = muk_from_mujn(eos_exact(x, n));
    for (int k = 1; k <= n; ++k) ASSERT_EQ(mu[k - 1], eos_exact(x, k).back());
  }
}

// Normalized spacings are binomial moments of the law of T built from X.
TEST(OracleProperty, BinomialMomentIdentity) {
  Gen g(7);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = g.discrete(2, 5);
    const int n = g.integer(3, 9);
    const BetaSequence<Rational> beta(eos_exact(x, n));
    const auto lhs = binomial_moments_from_beta(beta);
    std::vector<Number> values(x.values().begin(), x.values().end());
    std::vector<Number> masses(x.masses().begin(), x.masses().end());
    const TransformResult t = T_from_X(QuantileFunction::step(values, masses));
    ASSERT_TRUE(t.atoms.has_value());
    const auto rhs = binomial_transform(proptest::exact_moments(*t.atoms, n - 2));
    ASSERT_EQ(lhs.size(), rhs.size());
    for (std::size_t j = 0; j < lhs.size(); ++j) ASSERT_EQ(lhs[j], rhs[j]) << "j=" << j;
  }
}
