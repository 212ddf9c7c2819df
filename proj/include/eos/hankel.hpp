#pragma once

// Epsilon-parameterized Hankel pairs for the truncated moment problem on
// [eps, 1 - eps] and positive (semi)definiteness tests.
//
// With moments s_0..s_d:
//   d = 2m   (Even): A = (s_{i+j})_{0..m},
//                    B = (s_{i+j+1} - s_{i+j+2} - eps(1-eps) s_{i+j})_{0..m-1}
//   d = 2m+1 (Odd):  A = (s_{i+j+1} - eps s_{i+j})_{0..m},
//                    B = ((1-eps) s_{i+j} - s_{i+j+1})_{0..m}
// For an EOS candidate of size n the moments are nu_0..nu_{n-2}; for a
// binomial mixture of order n they are u_0..u_n. The parity rule is the same.

#include <vector>

#include "eos/eigen.hpp"
#include "eos/sym_matrix.hpp"

namespace eos {

inline constexpr double kDefaultTol = 1e-9;

enum class Parity { Even, Odd };

template <typename T>
struct HankelPair {
  Parity parity = Parity::Even;
  int m = 0;
  SymMatrix<T> a;
  SymMatrix<T> b;
  T epsilon;
};

// Throws TooFewMoments (fewer than three moments) or EpsilonOutOfRange.
template <typename T>
HankelPair<T> build_hankel(const std::vector<T>& moments, const T& epsilon);

enum class PsdStatus { PositiveDefinite, PositiveSemidefiniteSingular, Indefinite };

const char* to_string(PsdStatus s);

struct PsdVerdict {
  PsdStatus status = PsdStatus::Indefinite;
  double min_eigenvalue = 0;
  double scale = 0;  // largest |eigenvalue|
  bool exact = false;
  int rank = 0;
};

// Floating path: Jacobi eigenvalues. PositiveDefinite iff
// lambda_min > tol * max(1, |lambda_max|), Indefinite iff
// lambda_min < -tol * max(1, |lambda_max|).
PsdVerdict psd_check(const SymMatrix<double>& m, double tol = kDefaultTol);

// Exact path: the status and rank come from rational arithmetic (principal
// minors for dim <= 3, pivoted LDL^T above); tol is unused. Eigenvalues in
// the verdict are the floating approximations, for reporting only.
PsdVerdict psd_check(const SymMatrix<Rational>& m, double tol = kDefaultTol);

// Sylvester-style classification from principal minors: positive definite
// iff all leading minors are positive, semidefinite iff every principal
// minor is nonnegative.
PsdStatus sylvester_classify(const SymMatrix<Rational>& m);

// Inertia-preserving symmetric elimination with diagonal pivoting.
struct ExactInertia {
  PsdStatus status = PsdStatus::Indefinite;
  int rank = 0;
};
ExactInertia ldl_classify(const SymMatrix<Rational>& m);

// Fraction-free (Bareiss) determinant.
Rational determinant(const SymMatrix<Rational>& m);

}  // namespace eos
