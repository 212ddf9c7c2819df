#pragma once

#include <cmath>
#include <vector>

#include "eos/error.hpp"
#include "eos/number.hpp"

namespace eos {

// Gaussian elimination with partial pivoting on a dense row-major n x n
// system. Exact for Rational. Throws NotRepresentable on a zero pivot.
template <typename T>
std::vector<T> solve_linear(std::vector<T> a, std::vector<T> b) {
  const int n = static_cast<int>(b.size());
  for (int k = 0; k < n; ++k) {
    int pivot = k;
    if constexpr (is_exact_v<T>) {
      while (pivot < n && sgn(a[pivot * n + k]) == 0) ++pivot;
    } else {
      for (int i = k + 1; i < n; ++i)
        if (std::fabs(a[i * n + k]) > std::fabs(a[pivot * n + k])) pivot = i;
    }
    if (pivot == n || is_zero(a[pivot * n + k])) {
      throw Error(ErrorCode::NotRepresentable, "singular linear system");
    }
    if (pivot != k) {
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[pivot * n + j]);
      std::swap(b[k], b[pivot]);
    }
    for (int i = k + 1; i < n; ++i) {
      if (is_zero(a[i * n + k])) continue;
      const T f = a[i * n + k] / a[k * n + k];
      for (int j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
      b[i] -= f * b[k];
    }
  }
  std::vector<T> x(n);
  for (int i = n - 1; i >= 0; --i) {
    T s = b[i];
    for (int j = i + 1; j < n; ++j) s -= a[i * n + j] * x[j];
    x[i] = s / a[i * n + i];
  }
  return x;
}

// Horner evaluation of sum coeffs[k] x^k.
template <typename T>
T poly_eval(const std::vector<T>& coeffs, const T& x) {
  T acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace eos
