#include "eos/moment_core.hpp"

#include <array>
#include <cmath>
#include <string>

#include "eos/error.hpp"

namespace eos {

namespace {

using BinomialTable = std::array<std::array<std::uint64_t, kMaxOrder + 1>, kMaxOrder + 1>;

BinomialTable make_binomial_table() {
  BinomialTable t{};
  for (int n = 0; n <= kMaxOrder; ++n) {
    t[n][0] = 1;
    for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
  }
  return t;
}

const BinomialTable& binomial_table() {
  static const BinomialTable table = make_binomial_table();
  return table;
}

void check_order(int n) {
  if (n > kMaxOrder) {
    throw Error(ErrorCode::UnsupportedSize,
                "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxOrder));
  }
}

template <typename T>
bool is_negative(const T& x) {
  return x < 0;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0) throw Error(ErrorCode::InvalidSequence, "negative binomial order");
  check_order(n);
  if (k < 0 || k > n) return 0;
  return binomial_table()[n][k];
}

template <typename T>
BetaSequence<T>::BetaSequence(std::vector<T> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw Error(ErrorCode::InvalidSequence, "need at least two values");
  }
  check_order(static_cast<int>(values_.size()));
  for (std::size_t j = 0; j + 1 < values_.size(); ++j) {
    if constexpr (!is_exact_v<T>) {
      if (!std::isfinite(values_[j]) || !std::isfinite(values_[j + 1])) {
        throw Error(ErrorCode::InvalidSequence, "non-finite value");
      }
    }
    if (!(values_[j + 1] > values_[j])) {
      throw Error(ErrorCode::InvalidSequence,
                  "values must be strictly increasing (index " + std::to_string(j + 1) + ")");
    }
  }
}

template <typename T>
ProbabilityVector<T>::ProbabilityVector(std::vector<T> p) : p_(std::move(p)) {
  if (p_.size() < 2) throw Error(ErrorCode::InvalidSequence, "probability vector needs n >= 1");
  check_order(static_cast<int>(p_.size()) - 1);
  T sum = 0;
  for (std::size_t j = 0; j < p_.size(); ++j) {
    if constexpr (!is_exact_v<T>) {
      if (!std::isfinite(p_[j])) throw Error(ErrorCode::InvalidSequence, "non-finite mass");
    }
    if (is_negative(p_[j])) {
      throw Error(ErrorCode::NegativeMass, "p[" + std::to_string(j) + "] < 0");
    }
    sum += p_[j];
  }
  if constexpr (is_exact_v<T>) {
    if (sum != 1) throw Error(ErrorCode::MassNotOne, "masses sum to " + sum.get_str());
  } else {
    if (std::fabs(sum - 1.0) > 1e-10) {
      throw Error(ErrorCode::MassNotOne, "masses sum to " + format_double(sum));
    }
  }
}

template <typename T>
Spacings<T> spacings_and_lambda(const BetaSequence<T>& beta) {
  const int n = beta.n();
  Spacings<T> out;
  out.lambda = 0;
  out.spacings.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    T d = beta[i] - beta[i - 1];
    out.lambda += T(i * (n - i)) * d;
    out.spacings.push_back(d);
  }
  return out;
}

template <typename T>
NuVector<T> nu_from_beta(const BetaSequence<T>& beta) {
  const int n = beta.n();
  const Spacings<T> sp = spacings_and_lambda(beta);
  NuVector<T> out;
  out.n = n;
  out.lambda = sp.lambda;
  out.nu.reserve(n - 1);
  for (int k = 0; k <= n - 2; ++k) {
    T sum = 0;
    for (int j = k + 1; j <= n - 1; ++j) {
      sum += T(n - j) * binomial_as<T>(j, k + 1) * sp.spacings[j - 1];
    }
    T nu = T(n - 1) * sum / (sp.lambda * binomial_as<T>(n - 1, k + 1));
    out.nu.push_back(nu);
  }
  // The k = 0 term reduces to lambda / lambda.
  if constexpr (is_exact_v<T>) {
    if (out.nu.front() != 1) throw Error(ErrorCode::InvalidSequence, "nu_0 != 1");
  }
  out.nu.front() = 1;
  return out;
}

template <typename T>
std::vector<T> muk_from_mujn(const std::vector<T>& mujn) {
  const int n = static_cast<int>(mujn.size());
  if (n < 1) throw Error(ErrorCode::InvalidSequence, "empty sequence");
  check_order(n);
  std::vector<T> mu(n);
  for (int k = 1; k <= n; ++k) {
    T sum = 0;
    for (int j = k; j <= n; ++j) sum += binomial_as<T>(j - 1, k - 1) * mujn[j - 1];
    mu[k - 1] = sum / binomial_as<T>(n, k);
  }
  return mu;
}

template <typename T>
std::vector<T> mujn_from_muk(const std::vector<T>& muk) {
  const int n = static_cast<int>(muk.size());
  if (n < 1) throw Error(ErrorCode::InvalidSequence, "empty sequence");
  check_order(n);
  std::vector<T> out(n);
  for (int j = 1; j <= n; ++j) {
    T sum = 0;
    for (int i = j; i <= n; ++i) {
      T term = binomial_as<T>(n - j, i - j) * muk[i - 1] / T(i);
      if ((i - j) % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out[j - 1] = T(n) * binomial_as<T>(n - 1, j - 1) * sum;
  }
  return out;
}

template <typename T>
std::vector<T> u_from_p(const ProbabilityVector<T>& p) {
  const int n = p.n();
  const auto& pv = p.values();
  std::vector<T> u(n + 1);
  for (int k = 0; k <= n; ++k) {
    T sum = 0;
    for (int j = k; j <= n; ++j) sum += binomial_as<T>(j, k) * pv[j];
    u[k] = sum / binomial_as<T>(n, k);
  }
  return u;
}

template <typename T>
std::vector<T> binomial_moments_from_beta(const BetaSequence<T>& beta) {
  const int n = beta.n();
  const Spacings<T> sp = spacings_and_lambda(beta);
  std::vector<T> out(n - 1);
  for (int j = 0; j <= n - 2; ++j) {
    out[j] = T((j + 1) * (n - j - 1)) * sp.spacings[j] / sp.lambda;
  }
  return out;
}

template <typename T>
std::vector<T> binomial_transform(const std::vector<T>& moments) {
  const int d = static_cast<int>(moments.size()) - 1;
  if (d < 0) throw Error(ErrorCode::TooFewMoments, "empty moment vector");
  check_order(d);
  std::vector<T> out(d + 1);
  for (int j = 0; j <= d; ++j) {
    T sum = 0;
    for (int i = 0; i <= d - j; ++i) {
      T term = binomial_as<T>(d - j, i) * moments[j + i];
      if (i % 2 == 0) {
        sum += term;
      } else {
        sum -= term;
      }
    }
    out[j] = binomial_as<T>(d, j) * sum;
  }
  return out;
}

template <typename T>
std::vector<T> normalize_eos(const BetaSequence<T>& beta) {
  const int n = beta.n();
  T mean = 0;
  for (const auto& b : beta.values()) mean += b;
  mean /= T(n);
  T scale = spacings_and_lambda(beta).lambda / T(n * (n - 1));
  std::vector<T> out;
  out.reserve(n);
  for (const auto& b : beta.values()) out.push_back((b - mean) / scale);
  return out;
}

#define EOS_INSTANTIATE(T)                                                        \
  template class BetaSequence<T>;                                                 \
  template class ProbabilityVector<T>;                                            \
  template Spacings<T> spacings_and_lambda(const BetaSequence<T>&);               \
  template NuVector<T> nu_from_beta(const BetaSequence<T>&);                      \
  template std::vector<T> muk_from_mujn(const std::vector<T>&);                   \
  template std::vector<T> mujn_from_muk(const std::vector<T>&);                   \
  template std::vector<T> u_from_p(const ProbabilityVector<T>&);                  \
  template std::vector<T> binomial_moments_from_beta(const BetaSequence<T>&);     \
  template std::vector<T> binomial_transform(const std::vector<T>&);              \
  template std::vector<T> normalize_eos(const BetaSequence<T>&);

EOS_INSTANTIATE(double)
EOS_INSTANTIATE(Rational)

#undef EOS_INSTANTIATE

}  // namespace eos
