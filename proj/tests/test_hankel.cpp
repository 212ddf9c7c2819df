#include <gtest/gtest.h>

#include <cmath>

#include "eos/eigen.hpp"
#include "eos/error.hpp"
#include "eos/hankel.hpp"
#include "eos/moment_core.hpp"
#include "support.hpp"

using namespace eos;
using eos::proptest::Gen;

namespace {

SymMatrix<Rational> rmat(int dim, std::vector<Rational> v) { return SymMatrix<Rational>(dim, std::move(v)); }

const std::vector<Rational> kNu4 = {1, Rational(1, 2), Rational(1, 4)};

}  // namespace

TEST(BuildHankel, EvenExample) {
  const auto h = build_hankel(kNu4, Rational(0));
  EXPECT_EQ(h.parity, Parity::Even);
  EXPECT_EQ(h.a, rmat(2, {1, Rational(1, 2), Rational(1, 2), Rational(1, 4)}));
  EXPECT_EQ(h.b, rmat(1, {Rational(1, 4)}));
}

TEST(BuildHankel, EvenWithEpsilon) {
  const auto h = build_hankel(kNu4, Rational(1, 10));
  EXPECT_EQ(h.a, build_hankel(kNu4, Rational(0)).a);
  EXPECT_EQ(h.b, rmat(1, {Rational(4, 25)}));
  const auto hf = build_hankel(std::vector<double>{1, 0.5, 0.25}, 0.1);
  EXPECT_NEAR(hf.b(0, 0), 0.16, 1e-15);
}

TEST(BuildHankel, OddExample) {
  const std::vector<Rational> nu = {1, Rational(2, 3), Rational(1, 2), Rational(2, 5)};
  const auto h = build_hankel(nu, Rational(0));
  EXPECT_EQ(h.parity, Parity::Odd);
  EXPECT_EQ(h.a, rmat(2, {nu[1], nu[2], nu[2], nu[3]}));
  EXPECT_EQ(h.b, rmat(2, {1 - nu[1], nu[1] - nu[2], nu[1] - nu[2], nu[2] - nu[3]}));
}

TEST(BuildHankel, Dimensions) {
  for (int len = 3; len <= 12; ++len) {
    std::vector<double> s(len);
    for (int k = 0; k < len; ++k) s[k] = std::pow(0.5, k);
    const auto h = build_hankel(s, 0.0);
    const int d = len - 1;
    if (d % 2 == 0) {
      EXPECT_EQ(h.a.dim(), d / 2 + 1);
      EXPECT_EQ(h.b.dim(), d / 2);
    } else {
      EXPECT_EQ(h.a.dim(), (d - 1) / 2 + 1);
      EXPECT_EQ(h.b.dim(), (d - 1) / 2 + 1);
    }
  }
}

TEST(BuildHankel, Errors) {
  EXPECT_THROW(build_hankel(std::vector<double>{1, 0.5}, 0.0), Error);
  EXPECT_THROW(build_hankel(kNu4, Rational(1, 2)), Error);
  EXPECT_THROW(build_hankel(kNu4, Rational(-1, 10)), Error);
}

TEST(PsdCheck, Examples) {
  const auto singular = psd_check(rmat(2, {1, Rational(1, 2), Rational(1, 2), Rational(1, 4)}));
  EXPECT_EQ(singular.status, PsdStatus::PositiveSemidefiniteSingular);
  EXPECT_TRUE(singular.exact);
  EXPECT_EQ(singular.rank, 1);
  EXPECT_EQ(determinant(rmat(2, {1, Rational(1, 2), Rational(1, 2), Rational(1, 4)})), 0);

  const auto id = psd_check(SymMatrix<double>(2, {1, 0, 0, 1}));
  EXPECT_EQ(id.status, PsdStatus::PositiveDefinite);
  EXPECT_NEAR(id.min_eigenvalue, 1.0, 1e-15);

  const auto ind = psd_check(SymMatrix<double>(2, {1, 2, 2, 1}));
  EXPECT_EQ(ind.status, PsdStatus::Indefinite);
  EXPECT_NEAR(ind.min_eigenvalue, -1.0, 1e-14);
  EXPECT_NEAR(ind.scale, 3.0, 1e-14);
}

TEST(PsdCheck, NonSymmetricRejected) {
  EXPECT_THROW(SymMatrix<double>(2, {1, 2, 3, 1}), Error);
}

TEST(PsdCheck, SylvesterNeedsAllPrincipalMinorsForSemidefinite) {
  // Leading minors are 0, 0, 0 but the matrix is indefinite.
  const auto m = rmat(3, {0, 0, 0, 0, 0, 1, 0, 1, 0});
  EXPECT_EQ(sylvester_classify(m), PsdStatus::Indefinite);
  EXPECT_EQ(psd_check(m).status, PsdStatus::Indefinite);
}

// ------------------------------------------------------------ properties

TEST(HankelProperty, EigenReconstruction) {
  Gen g(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.integer(1, 8);
    SymMatrix<double> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, g.real(-10, 10));
    const SymEigen e = jacobi_eigen(m);
    double num = 0;
    double den = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double r = 0;
        for (int k = 0; k < n; ++k) r += e.vector(i, k) * e.values[k] * e.vector(j, k);
        num += (r - m(i, j)) * (r - m(i, j));
        den += m(i, j) * m(i, j);
      }
    }
    ASSERT_LT(std::sqrt(num), 1e-12 * std::sqrt(den)) << "dim " << n;
    for (int k = 1; k < n; ++k) ASSERT_LE(e.values[k - 1], e.values[k]);
  }
}

TEST(HankelProperty, EvenAIndependentOfEpsilon) {
  Gen g(32);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 * g.integer(2, 6);
    const auto nu = nu_from_beta(BetaSequence<double>(proptest::doubles(g.increasing(n)))).nu;
    const auto a0 = build_hankel(nu, 0.0).a;
    for (int i = 1; i < 20; ++i) ASSERT_EQ(build_hankel(nu, 0.49 * i / 20.0).a, a0);
  }
}

// Even case: B(eps) = B(0) - eps(1 - eps) M with M a leading block of A.
// When A is PSD (valid moment vector) an indefinite B(0) stays indefinite.
TEST(HankelProperty, MonotoneRejection) {
  Gen g(33);
  int indefinite_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * g.integer(2, 5);
    const auto nu = nu_from_beta(BetaSequence<Rational>(g.increasing(n))).nu;
    const auto h0 = build_hankel(nu, Rational(0));
    if (psd_check(h0.a).status == PsdStatus::Indefinite) continue;
    const auto b0 = psd_check(h0.b);
    if (b0.status != PsdStatus::Indefinite) continue;
    ++indefinite_seen;
    for (int i = 1; i <= 20; ++i) {
      const Rational eps(i, 41);
      ASSERT_EQ(psd_check(build_hankel(nu, eps).b).status, PsdStatus::Indefinite);
    }
  }
  EXPECT_GT(indefinite_seen, 10);
}

TEST(HankelProperty, FloatAgreesWithSylvester) {
  Gen g(34);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = g.integer(2, 3);
    SymMatrix<Rational> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) m.set(i, j, Rational(g.integer(-4, 4), g.integer(1, 3)));
    // Half the time make it a Gram matrix so semidefinite cases show up.
    if (trial % 2 == 0) {
      SymMatrix<Rational> gram(n);
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          Rational s = 0;
          for (int k = 0; k < n - 1; ++k) s += m(k, i) * m(k, j);
          gram.set(i, j, s);
        }
      m = gram;
    }
    const PsdStatus exact = sylvester_classify(m);
    const PsdVerdict fl = psd_check(to_double(m));
    if (exact == PsdStatus::PositiveSemidefiniteSingular && fl.scale == 0) continue;
    ASSERT_EQ(fl.status, exact) << "trial " << trial;
    ASSERT_EQ(psd_check(m).status, exact);
    ASSERT_EQ(ldl_classify(m).status, exact);
    ++checked;
  }
  EXPECT_GT(checked, 1500);
}

TEST(HankelProperty, LdlMatchesSylvesterOnLargerGramMatrices) {
  Gen g(35);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.integer(4, 7);
    const int rank = g.integer(0, n);
    std::vector<std::vector<Rational>> rows(rank, std::vector<Rational>(n));
    for (auto& r : rows)
      for (auto& x : r) x = Rational(g.integer(-3, 3), g.integer(1, 2));
    SymMatrix<Rational> m(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Rational s = 0;
        for (const auto& r : rows) s += r[i] * r[j];
        m.set(i, j, s);
      }
    const ExactInertia e = ldl_classify(m);
    ASSERT_NE(e.status, PsdStatus::Indefinite);
    ASSERT_LE(e.rank, rank);
    if (trial % 3 == 0) {
      m.set(0, 0, m(0, 0) - 1);
      const ExactInertia shifted = ldl_classify(m);
      // Removing mass from a diagonal entry of a PSD matrix can only keep it
      // PSD when that row is not forced to zero; compare with minors for dim 4.
      if (n == 4) {
        SymMatrix<Rational> copy = m;
        bool all_nonneg = true;
        for (int mask = 1; mask < 16; ++mask) {
          std::vector<int> idx;
          for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) idx.push_back(b);
          SymMatrix<Rational> sub(static_cast<int>(idx.size()));
          for (std::size_t a = 0; a < idx.size(); ++a)
            for (std::size_t b = a; b < idx.size(); ++b) sub.set(a, b, copy(idx[a], idx[b]));
          if (sgn(determinant(sub)) < 0) all_nonneg = false;
        }
        ASSERT_EQ(shifted.status == PsdStatus::Indefinite, !all_nonneg);
      }
    }
  }
}
