#include "eos/oracle.hpp"

#include <cmath>

#include "eos/error.hpp"
#include "eos/moment_core.hpp"

namespace eos {

namespace {

template <typename T>
T power(const T& x, int k) {
  T r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

template <typename T>
bool approx_one(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x == 1;
  } else {
    return std::fabs(x - 1.0) <= 1e-12;
  }
}

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) throw Error(ErrorCode::UnsupportedSize, "sample size must lie in [1, 64]");
}

// Pr(X_{j:n} <= v) given F(v) = f.
template <typename T>
T order_cdf(const T& f, int j, int n) {
  T total(0);
  const T g = T(1) - f;
  for (int i = j; i <= n; ++i) total += binomial_as<T>(n, i) * power<T>(f, i) * power<T>(g, n - i);
  return total;
}

}  // namespace

template <typename T>
DiscreteDistribution<T>::DiscreteDistribution(std::vector<T> values, std::vector<T> masses)
    : values_(std::move(values)), masses_(std::move(masses)) {
  if (values_.empty() || values_.size() != masses_.size()) {
    throw Error(ErrorCode::InvalidSequence, "values and masses must be nonempty and of equal length");
  }
  T total(0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i > 0 && !(values_[i - 1] < values_[i])) {
      throw Error(ErrorCode::InvalidSequence, "support values must be strictly increasing");
    }
    if (!(masses_[i] > 0)) throw Error(ErrorCode::NegativeMass, "masses must be positive");
    total += masses_[i];
    cdf_.push_back(total);
  }
  if (!approx_one(total)) throw Error(ErrorCode::MassNotOne, "masses must sum to 1");
  cdf_.back() = T(1);
}

template <typename T>
std::vector<T> eos_exact(const DiscreteDistribution<T>& x, int n) {
  check_order(n);
  std::vector<T> out;
  out.reserve(n);
  for (int j = 1; j <= n; ++j) {
    T sum(0);
    T below(0);  // Pr(X_{j:n} <= previous support value)
    for (std::size_t l = 0; l < x.size(); ++l) {
      const T at = order_cdf(x.cdf()[l], j, n);
      sum += x.values()[l] * (at - below);
      below = at;
    }
    out.push_back(sum);
  }
  return out;
}

template <typename T>
std::vector<T> spacing_pearson(const DiscreteDistribution<T>& x, int n) {
  check_order(n);
  if (n < 2) throw Error(ErrorCode::UnsupportedSize, "spacings need n >= 2");
  if (x.size() < 2) throw Error(ErrorCode::DegenerateInput, "a one-point law has no spacings");
  std::vector<T> out;
  out.reserve(n - 1);
  for (int j = 1; j < n; ++j) {
    T sum(0);
    for (std::size_t l = 0; l + 1 < x.size(); ++l) {
      const T& f = x.cdf()[l];
      const T gap = x.values()[l + 1] - x.values()[l];
      sum += binomial_as<T>(n, j) * power<T>(f, j) * power<T>(T(1) - f, n - j) * gap;
    }
    out.push_back(sum);
  }
  return out;
}

template class DiscreteDistribution<double>;
template class DiscreteDistribution<Rational>;
template std::vector<double> eos_exact(const DiscreteDistribution<double>&, int);
template std::vector<Rational> eos_exact(const DiscreteDistribution<Rational>&, int);
template std::vector<double> spacing_pearson(const DiscreteDistribution<double>&, int);
template std::vector<Rational> spacing_pearson(const DiscreteDistribution<Rational>&, int);

}  // namespace eos
