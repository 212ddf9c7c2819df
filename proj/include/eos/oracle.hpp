#pragma once

// Brute-force expected order statistics of finitely supported laws.
// Exact in rational arithmetic; used as ground truth by the test suites.

#include <vector>

#include "eos/number.hpp"

namespace eos {

template <typename T>
class DiscreteDistribution {
 public:
  // Values strictly increasing, masses positive and summing to 1.
  DiscreteDistribution(std::vector<T> values, std::vector<T> masses);

  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  const std::vector<T>& masses() const { return masses_; }
  // F(values[i]) = masses[0] + ... + masses[i]
  const std::vector<T>& cdf() const { return cdf_; }

 private:
  std::vector<T> values_;
  std::vector<T> masses_;
  std::vector<T> cdf_;
};

// E X_{j:n}, j = 1..n. Throws UnsupportedSize for n outside [1, 64].
template <typename T>
std::vector<T> eos_exact(const DiscreteDistribution<T>& x, int n);

// E X_{j+1:n} - E X_{j:n}, j = 1..n-1, from the integral of
// C(n, j) F^j (1 - F)^(n - j) over the support gaps.
// A single-atom law is rejected with DegenerateInput.
template <typename T>
std::vector<T> spacing_pearson(const DiscreteDistribution<T>& x, int n);

}  // namespace eos
