#pragma once

// Transforms between expected-order-statistic (EOS) vectors, max-moments
// mu_k = E X_{k:k}, the normalized moment vector nu, and the moment vector
// u of a binomial mixture. Every function is templated on the scalar type
// and instantiated for double and Rational.

#include <cstdint>
#include <string>
#include <vector>

#include "eos/number.hpp"

namespace eos {

inline constexpr int kMaxOrder = 64;

// Exact C(n, k) for 0 <= n <= 64; zero when k is outside [0, n].
std::uint64_t binomial(int n, int k);

template <typename T>
T binomial_as(int n, int k) {
  if constexpr (is_exact_v<T>) {
    return Rational(mpz_class(static_cast<unsigned long>(binomial(n, k))));
  } else {
    return static_cast<double>(binomial(n, k));
  }
}

// Candidate EOS vector beta_1 < ... < beta_n with 2 <= n <= 64.
template <typename T>
class BetaSequence {
 public:
  explicit BetaSequence(std::vector<T> values);

  int n() const { return static_cast<int>(values_.size()); }
  const std::vector<T>& values() const { return values_; }
  const T& operator[](std::size_t i) const { return values_[i]; }

 private:
  std::vector<T> values_;
};

template <typename T>
struct Spacings {
  std::vector<T> spacings;  // beta_{i+1} - beta_i
  T lambda;                 // sum i (n - i) spacing_i
};

// nu_0 = 1 > nu_1 > ... > nu_{n-2} > 0, invariant under a*beta + b.
template <typename T>
struct NuVector {
  std::vector<T> nu;
  T lambda;
  int n = 0;
};

template <typename T>
class ProbabilityVector {
 public:
  // Throws NegativeMass or MassNotOne. The sum must be exactly one for
  // rationals and within 1e-10 for doubles.
  explicit ProbabilityVector(std::vector<T> p);

  int n() const { return static_cast<int>(p_.size()) - 1; }
  const std::vector<T>& values() const { return p_; }

 private:
  std::vector<T> p_;
};

template <typename T>
Spacings<T> spacings_and_lambda(const BetaSequence<T>& beta);

template <typename T>
NuVector<T> nu_from_beta(const BetaSequence<T>& beta);

// mu_k = C(n,k)^{-1} sum_{j=k}^n C(j-1,k-1) mu_{j:n}, k = 1..n.
template <typename T>
std::vector<T> muk_from_mujn(const std::vector<T>& mujn);

// mu_{j:n} = n C(n-1,j-1) sum_{i=j}^n (-1)^{i-j} C(n-j,i-j) mu_i / i.
template <typename T>
std::vector<T> mujn_from_muk(const std::vector<T>& muk);

// u_k = C(n,k)^{-1} sum_{j=k}^n C(j,k) p_j, k = 0..n.
template <typename T>
std::vector<T> u_from_p(const ProbabilityVector<T>& p);

// Left-hand side of the binomial-moment characterization:
// (j+1)(n-j-1)(beta_{j+2}-beta_{j+1}) / lambda, j = 0..n-2.
template <typename T>
std::vector<T> binomial_moments_from_beta(const BetaSequence<T>& beta);

// E{C(d,j) T^j (1-T)^{d-j}} written in terms of the power moments
// moments[k] = E T^k, k = 0..d.
template <typename T>
std::vector<T> binomial_transform(const std::vector<T>& moments);

// (beta_j - c) / lambda with c the mean and lambda = (n(n-1))^{-1} sum
// i(n-i)(beta_{i+1}-beta_i): the representative with E X = 0 and
// E X_{2:2} - E X_{1:1} = 1.
template <typename T>
std::vector<T> normalize_eos(const BetaSequence<T>& beta);

}  // namespace eos
