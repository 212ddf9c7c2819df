#include "support.hpp"

#include "eos/moment_core.hpp"

namespace eos::proptest {

std::vector<Rational> binomial_tail_sequence(int n) {
  std::vector<Rational> b;
  for (int j = 1; j <= n; ++j) {
    Rational s = 0;
    for (int k = n + 1 - j; k <= n; ++k) s += binomial_as<Rational>(n, k);
    b.push_back(s);
  }
  return b;
}

std::vector<Rational> exact_moments(const AtomicMeasure& m, int d) {
  std::vector<Rational> out;
  for (int k = 0; k <= d; ++k) out.push_back(m.exact_moment(k));
  return out;
}

}  // namespace eos::proptest
