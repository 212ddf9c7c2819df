#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "eos/error.hpp"
#include "eos/generator.hpp"
#include "eos/moment_core.hpp"
#include "eos/oracle.hpp"
#include "eos/quadrature.hpp"
#include "support.hpp"

using namespace eos;
using eos::proptest::Gen;

namespace {

struct Pair {
  std::string name;
  MixingDistribution law;
  std::function<double(double)> quantile;
};

std::vector<Pair> classic_pairs() {
  std::vector<Pair> out;
  out.push_back({"beta22", MixingDistribution::beta(2, 2), [](double t) { return 6 * t - 3; }});
  out.push_back({"beta21", MixingDistribution::beta(2, 1), [](double t) { return -2 - 2 * std::log1p(-t); }});
  out.push_back({"beta12", MixingDistribution::beta(1, 2), [](double t) { return 2 + 2 * std::log(t); }});
  out.push_back({"uniform", MixingDistribution::uniform(), [](double t) { return std::log(t / (1 - t)); }});
  for (double rho : {0.2, 0.5, 0.8}) {
    out.push_back({"degenerate" + std::to_string(rho), MixingDistribution::degenerate(rho),
                   [rho](double t) { return t <= rho ? -1 / rho : 1 / (1 - rho); }});
  }
  return out;
}

// Same laws handed over as bare densities, forcing the quadrature path.
MixingDistribution as_density(double a, double b) {
  const double norm = std::tgamma(a + b) / (std::tgamma(a) * std::tgamma(b));
  return MixingDistribution::from_density(
      [=](double t, double omt) { return norm * std::pow(t, a - 1) * std::pow(omt, b - 1); });
}

double integral_of(const QuantileFunction& q) {
  return integrate([&](double s) { return q.at_logit(s) * sigmoid(s) * sigmoid_complement(s); }, -kInf, kInf);
}

}  // namespace

TEST(ComputeCT, Examples) {
  EXPECT_EQ(compute_cT(MixingDistribution::degenerate(Rational(1, 2))), Number(Rational(2)));
  EXPECT_NEAR(compute_cT(MixingDistribution::beta(2, 2)).value(), 0.0, 1e-12);
  EXPECT_NEAR(compute_cT(MixingDistribution::uniform()).value(), 0.0, 1e-12);
  EXPECT_NEAR(compute_cT(as_density(2, 2)).value(), 0.0, 1e-10);
}

TEST(ComputeCT, AtomicIsExact) {
  const AtomicMeasure m({Atom{Rational(1, 4), Rational(1, 3)}, Atom{Rational(2, 3), Rational(2, 3)}});
  // -(1/3)/(3/4) + (2/3)/(2/3)
  EXPECT_EQ(compute_cT(MixingDistribution::atomic(m)), Number(Rational(5, 9)));
}

TEST(ComputeCT, BetaAgreesWithQuadratureOfDensity) {
  for (auto [a, b] : {std::pair{2.0, 1.0}, {1.0, 2.0}, {3.0, 5.0}, {2.5, 2.5}}) {
    EXPECT_NEAR(compute_cT(MixingDistribution::beta(a, b)).value(), compute_cT(as_density(a, b)).value(), 1e-9);
  }
}

TEST(QuantileFromT, ClassicPairsOnGrid) {
  const auto grid = default_grid();
  for (const Pair& p : classic_pairs()) {
    const auto q = quantile_from_T(p.law);
    double worst = 0;
    for (double t : grid) worst = std::max(worst, std::fabs(q(t) - p.quantile(t)));
    EXPECT_LT(worst, 1e-8) << p.name;
  }
}

TEST(QuantileFromT, DensityPathMatchesClosedForms) {
  const auto grid = default_grid();
  const std::vector<std::pair<MixingDistribution, std::function<double(double)>>> cases = {
      {as_density(2, 2), [](double t) { return 6 * t - 3; }},
      {as_density(2, 1), [](double t) { return -2 - 2 * std::log1p(-t); }},
      {as_density(1, 2), [](double t) { return 2 + 2 * std::log(t); }},
      {as_density(1, 1), [](double t) { return std::log(t / (1 - t)); }},
  };
  for (const auto& [law, expected] : cases) {
    const auto q = quantile_from_T(law);
    ASSERT_EQ(q.kind(), QuantileKind::FromT);
    double worst = 0;
    for (double t : grid) worst = std::max(worst, std::fabs(q(t) - expected(t)));
    EXPECT_LT(worst, 1e-8) << law.label();
  }
}

TEST(QuantileFromT, DegenerateHalfIsPlusMinusTwo) {
  const auto q = quantile_from_T(MixingDistribution::degenerate(Rational(1, 2)));
  ASSERT_TRUE(q.exact());
  const auto x = q.discrete_exact();
  EXPECT_EQ(x.values(), (std::vector<Rational>{-2, 2}));
  EXPECT_EQ(x.masses(), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
}

TEST(QuantileFromT, AtomAtHalfRegeneratesFourPointExample) {
  const auto q = quantile_from_T(MixingDistribution::degenerate(Rational(1, 2)));
  // (0, 2, 5, 7) normalizes to the EOS of +-2 after the location-scale map.
  const auto n1 = normalize_eos(BetaSequence<Rational>(proptest::rationals({0, 2, 5, 7})));
  EXPECT_EQ(eos_exact(q.discrete_exact(), 4), n1);
}

TEST(TFromX, Examples) {
  const auto grid = default_grid();
  const auto logistic = T_from_X(QuantileFunction::closed_form(ClosedFormTag::Logistic, 0, 1));
  EXPECT_NEAR(logistic.lambda.value(), 1.0, 1e-14);
  for (std::size_t i = 0; i < grid.size(); ++i) ASSERT_NEAR(logistic.cdf[i], grid[i], 1e-12);
  const auto uni = T_from_X(QuantileFunction::closed_form(ClosedFormTag::UniformInterval, -3, 3));
  EXPECT_NEAR(uni.lambda.value(), 1.0, 1e-14);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i];
    ASSERT_NEAR(uni.cdf[i], 3 * t * t - 2 * t * t * t, 1e-12);
  }
  const auto two = T_from_X(QuantileFunction::two_point(Number(-2), Number(Rational(1, 2)), Number(2)));
  ASSERT_TRUE(two.atoms.has_value());
  ASSERT_EQ(two.atoms->size(), 1u);
  EXPECT_EQ(two.atoms->atoms()[0].location, Number(Rational(1, 2)));
  EXPECT_EQ(two.lambda, Number(Rational(1)));
}

TEST(TFromX, DensityExposed) {
  const auto r = T_from_X(QuantileFunction::closed_form(ClosedFormTag::UniformInterval, -3, 3));
  ASSERT_TRUE(r.density.has_value());
  for (std::size_t i = 0; i < r.grid.size(); i += 50) {
    const double t = r.grid[i];
    EXPECT_NEAR((*r.density)[i], 6 * t * (1 - t), 1e-12);
  }
}

TEST(TFromX, DegenerateInputRejected) {
  try {
    T_from_X(QuantileFunction::step({Number(3)}, {Number(1)}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateInput);
  }
}

TEST(TFromX, LocationScaleInvariant) {
  const auto a = T_from_X(QuantileFunction::closed_form(ClosedFormTag::Logistic, 0, 1));
  const auto b = T_from_X(QuantileFunction::closed_form(ClosedFormTag::Logistic, 5, 3));
  EXPECT_NEAR(b.lambda.value(), 3.0, 1e-13);
  for (std::size_t i = 0; i < a.cdf.size(); ++i) ASSERT_NEAR(a.cdf[i], b.cdf[i], 1e-12);
}

TEST(GeneratorBijection, TThenXThenT) {
  const auto grid = default_grid();
  for (const Pair& p : classic_pairs()) {
    const auto r = T_from_X(quantile_from_T(p.law), grid);
    double worst = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) worst = std::max(worst, std::fabs(r.cdf[i] - p.law.cdf_left(grid[i])));
    EXPECT_LT(worst, 1e-8) << p.name;
  }
}

TEST(GeneratorBijection, DensityPathRoundTrip) {
  const auto grid = default_grid();
  for (auto [a, b] : {std::pair{2.0, 2.0}, {3.0, 2.0}, {1.5, 4.0}}) {
    const auto law = as_density(a, b);
    const auto r = T_from_X(quantile_from_T(law), grid);
    double worst = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      worst = std::max(worst, std::fabs(r.cdf[i] - MixingDistribution::beta(a, b).cdf_left(grid[i])));
    }
    EXPECT_LT(worst, 1e-8) << a << "," << b;
    EXPECT_NEAR(r.lambda.value(), 1.0, 1e-9);
  }
}

TEST(GeneratorBijection, XThenTThenX) {
  const auto grid = default_grid();
  for (const Pair& p : classic_pairs()) {
    const auto r = T_from_X(quantile_from_T(p.law), grid);
    const auto q = quantile_from_T(r.law);
    double worst = 0;
    for (double t : grid) worst = std::max(worst, std::fabs(q(t) - p.quantile(t)));
    EXPECT_LT(worst, 1e-8) << p.name;
  }
}

TEST(GeneratorBijection, RandomDiscreteLaws) {
  Gen g(501);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = g.discrete(2, 5);
    const auto q = QuantileFunction::step(to_numbers(x.values()), to_numbers(x.masses()));
    const auto r = T_from_X(q);
    ASSERT_TRUE(r.atoms.has_value());
    const auto back = quantile_from_T(r.law);
    ASSERT_TRUE(back.exact());
    // X comes back normalized: (x - c) / lambda.
    const auto y = back.discrete_exact();
    ASSERT_EQ(y.masses(), x.masses());
    const Rational lambda = r.lambda.rational();
    Rational c = (x.values()[0] - y.values()[0] * lambda);
    for (std::size_t i = 0; i < x.size(); ++i) ASSERT_EQ(x.values()[i], y.values()[i] * lambda + c) << trial;
  }
}

TEST(HMembership, MeanZeroAndUnitSpacing) {
  std::vector<MixingDistribution> laws;
  for (const Pair& p : classic_pairs()) laws.push_back(p.law);
  laws.push_back(as_density(2, 2));
  laws.push_back(as_density(3, 1.5));
  laws.push_back(MixingDistribution::beta(0.7, 1.3));
  Gen g(502);
  for (int i = 0; i < 5; ++i) laws.push_back(MixingDistribution::atomic(g.atomic(g.integer(1, 4), 0.05, 0.95)));
  for (const auto& law : laws) {
    const auto q = quantile_from_T(law);
    const auto mu = max_moments(q, 2);
    EXPECT_LT(std::fabs(mu.mu(1).value()), 1e-9) << law.label();
    EXPECT_LT(std::fabs(mu.mu(2).value() - mu.mu(1).value() - 1), 1e-9) << law.label();
  }
}

TEST(HMembership, QuadratureOfQuantileVanishes) {
  for (const auto& law : {as_density(2, 2), as_density(3, 1.5), MixingDistribution::beta(2, 1)}) {
    EXPECT_LT(std::fabs(integral_of(quantile_from_T(law))), 1e-9);
  }
}

TEST(GeneratorProperty, MonotoneWithSignStructure) {
  std::vector<MixingDistribution> laws;
  for (const Pair& p : classic_pairs()) laws.push_back(p.law);
  laws.push_back(as_density(3, 1.5));
  Gen g(503);
  for (int i = 0; i < 5; ++i) laws.push_back(MixingDistribution::atomic(g.atomic(g.integer(1, 4), 0.05, 0.95)));
  for (const auto& law : laws) {
    const auto q = quantile_from_T(law);
    const double c = compute_cT(law).value();
    double prev = -kInf;
    for (double t : default_grid()) {
      const double x = q(t);
      ASSERT_GE(x, prev - 1e-12) << law.label() << " t=" << t;
      prev = x;
      const double gval = x + c;
      if (t < 0.5) ASSERT_LE(gval, 1e-9) << law.label() << " t=" << t;
      if (t > 0.5) ASSERT_GE(gval, -1e-9) << law.label() << " t=" << t;
    }
  }
}

TEST(GeneratorProperty, IntegralOfGIsCT) {
  for (const auto& law : {as_density(2, 2), as_density(3, 1.5), as_density(1, 2), MixingDistribution::beta(2, 1)}) {
    const auto q = quantile_from_T(law);
    const double c = compute_cT(law).value();
    const double ig = integrate([&](double s) { return (q.at_logit(s) + c) * sigmoid(s) * sigmoid_complement(s); },
                                -kInf, kInf);
    EXPECT_NEAR(ig, c, 1e-9) << law.label();
  }
}

TEST(MaxMoments, TwoPoint) {
  const auto q = QuantileFunction::two_point(Number(-2), Number(Rational(1, 2)), Number(2));
  const auto mu = max_moments(q, 8);
  for (int k = 1; k <= 8; ++k) EXPECT_EQ(mu.mu(k), Number(2 - Rational(4) / (1 << k))) << k;
  EXPECT_EQ(mu.mu(3), Number(Rational(3, 2)));
}

TEST(MaxMoments, UniformInterval) {
  const auto q = QuantileFunction::closed_form(ClosedFormTag::UniformInterval, -3, 3);
  const auto mu = max_moments(q, 10);
  for (int k = 1; k <= 10; ++k) EXPECT_NEAR(mu.mu(k).value(), 3.0 * (k - 1) / (k + 1), 1e-14);
}

TEST(MaxMoments, LogisticHarmonicAgainstQuadrature) {
  const auto closed = max_moments(QuantileFunction::closed_form(ClosedFormTag::Logistic, 0, 1), 6);
  const auto numeric = max_moments(quantile_from_T(as_density(1, 1)), 6);
  double h = 0;
  for (int k = 1; k <= 6; ++k) {
    if (k >= 2) h += 1.0 / (k - 1);
    EXPECT_NEAR(closed.mu(k).value(), h, 1e-13);
    EXPECT_NEAR(numeric.mu(k).value(), h, 1e-9);
  }
}

TEST(MaxMoments, StepAgreesWithOracle) {
  Gen g(504);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = g.discrete(2, 5);
    const auto q = QuantileFunction::step(to_numbers(x.values()), to_numbers(x.masses()));
    const auto mu = max_moments(q, 7);
    for (int k = 1; k <= 7; ++k) ASSERT_EQ(mu.mu(k), Number(eos_exact(x, k).back()));
  }
}

TEST(VerifyLemma1, DegenerateExact) {
  const auto r = verify_lemma1(MixingDistribution::degenerate(Rational(1, 2)), 5, 1e-12);
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.max_deviation, 0.0);
  EXPECT_EQ(r.mu1, 0.0);
}

TEST(VerifyLemma1, ClassicLaws) {
  for (const Pair& p : classic_pairs()) {
    const auto r = verify_lemma1(p.law, 6, 1e-8);
    EXPECT_TRUE(r.passed) << p.name;
    EXPECT_LT(r.max_deviation, 1e-8) << p.name;
    EXPECT_LT(r.mu1, 1e-9) << p.name;
    EXPECT_EQ(r.deviations.size(), 7u);
  }
}

TEST(VerifyLemma1, DensityAndAtomicLaws) {
  Gen g(505);
  std::vector<MixingDistribution> laws{as_density(2, 2), as_density(1, 1), as_density(2.5, 1.5)};
  for (int i = 0; i < 10; ++i) laws.push_back(MixingDistribution::atomic(g.atomic(g.integer(1, 4), 0.05, 0.95)));
  for (const auto& law : laws) {
    const auto r = verify_lemma1(law, 4, 1e-9);
    EXPECT_TRUE(r.passed) << law.label() << " dev " << r.max_deviation;
  }
}
