#pragma once

// Seeded generators shared by the property suites.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "eos/number.hpp"
#include "eos/oracle.hpp"
#include "eos/recovery.hpp"

namespace eos {

// Readable gtest failure messages.
inline void PrintTo(const Number& x, std::ostream* os) { *os << x.str(); }

}  // namespace eos

namespace eos::proptest {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  // num/den with |num| <= max_num, 1 <= den <= max_den.
  Rational rational(int max_num, int max_den) {
    Rational q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  Rational positive_rational(int max_num, int max_den) {
    Rational q(integer(1, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
  }

  // Strictly inside (0, 1), denominator at most max_den.
  Rational unit_rational(int max_den) {
    const int den = integer(2, max_den);
    Rational q(integer(1, den - 1), den);
    q.canonicalize();
    return q;
  }

  std::vector<Rational> increasing(int n, int max_num = 20, int max_den = 6) {
    std::vector<Rational> v;
    Rational x = rational(max_num, max_den);
    for (int i = 0; i < n; ++i) {
      v.push_back(x);
      x += positive_rational(max_num, max_den);
    }
    return v;
  }

  // Positive rational masses summing to one.
  std::vector<Rational> masses(int k, int max_num = 9) {
    std::vector<Rational> w;
    Rational total = 0;
    for (int i = 0; i < k; ++i) {
      w.emplace_back(integer(1, max_num));
      total += w.back();
    }
    for (auto& x : w) x /= total;
    return w;
  }

  DiscreteDistribution<Rational> discrete(int min_atoms, int max_atoms) {
    const int k = integer(min_atoms, max_atoms);
    return DiscreteDistribution<Rational>(increasing(k), masses(k));
  }

  // Distinct rational atoms in [lo, hi] with denominators up to max_den.
  AtomicMeasure atomic(int k, double lo, double hi, int max_den = 40, bool exact = true) {
    std::vector<Rational> loc;
    while (static_cast<int>(loc.size()) < k) {
      const int den = integer(2, max_den);
      Rational q(integer(1, den - 1), den);
      q.canonicalize();
      if (q.get_d() < lo || q.get_d() > hi) continue;
      if (std::find(loc.begin(), loc.end(), q) != loc.end()) continue;
      loc.push_back(q);
    }
    std::sort(loc.begin(), loc.end());
    const std::vector<Rational> w = masses(k);
    std::vector<Atom> atoms;
    for (int i = 0; i < k; ++i) {
      if (exact) {
        atoms.push_back(Atom{Number(loc[i]), Number(w[i])});
      } else {
        atoms.push_back(Atom{Number(loc[i].get_d()), Number(w[i].get_d())});
      }
    }
    return AtomicMeasure(std::move(atoms));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<Rational> rationals(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

inline std::vector<double> doubles(const std::vector<Rational>& xs) {
  std::vector<double> out;
  for (const auto& x : xs) out.push_back(x.get_d());
  return out;
}

// beta_j = sum_{k=n+1-j}^{n} C(n, k), j = 1..n
std::vector<Rational> binomial_tail_sequence(int n);

// Exact moments E T^k, k = 0..d, of a rational atomic measure.
std::vector<Rational> exact_moments(const AtomicMeasure& m, int d);

}  // namespace eos::proptest
