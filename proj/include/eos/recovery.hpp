#pragma once

// Atomic representing measures on [0, 1] for truncated moment vectors.

#include <vector>

#include "eos/hankel.hpp"
#include "eos/number.hpp"

namespace eos {

struct Atom {
  Number location;
  Number weight;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.location == b.location && a.weight == b.weight;
  }
};

// Finitely supported probability measure on [0, 1]: locations strictly
// increasing, weights positive, total mass one (exactly when every value is
// rational, within 1e-9 otherwise).
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  bool exact() const;

  // sum_i w_i t_i^k
  double moment(int k) const;
  Rational exact_moment(int k) const;

  friend bool operator==(const AtomicMeasure& a, const AtomicMeasure& b) { return a.atoms_ == b.atoms_; }

 private:
  std::vector<Atom> atoms_;
};

struct MeasureCheck {
  bool ok = false;
  double max_residual = 0;
};

// True iff |sum_i w_i t_i^k - moments[k]| <= tol * max(1, |moments[k]|) for
// every k. The residual is the largest absolute deviation.
template <typename T>
MeasureCheck verify_measure(const AtomicMeasure& measure, const std::vector<T>& moments, double tol);

// min(t_min, 1 - t_max); exact when the measure is.
Number support_gap(const AtomicMeasure& measure);

enum class RecoveryBranch { LowOrder, Interior, Determinate };

struct Recovery {
  AtomicMeasure measure;
  RecoveryBranch branch = RecoveryBranch::LowOrder;
  // Whether the measure charges 0 or 1. Decided in rational arithmetic when
  // `exact` is set, otherwise by comparing the support gap with tol.
  bool endpoint_atom = false;
  bool exact = false;
  double boundary_distance = 0;
  int rank = 0;  // rank of the singular moment matrix (Determinate only)
};

// Throws NotRepresentable when the moment matrices are not semidefinite or
// the reconstruction misses the moments by more than tol, and
// RankDetectionAmbiguous when an eigenvalue of the singular matrix sits in
// [1e-12, 1e-8] * sigma_max (floating path only).
template <typename T>
Recovery recover(const std::vector<T>& moments, double tol = kDefaultTol);

template <typename T>
AtomicMeasure recover_measure(const std::vector<T>& moments, double tol = kDefaultTol) {
  return recover(moments, tol).measure;
}

// Gauss rule with n nodes from moments s_0..s_{2n-1} whose Hankel block of
// order n is positive definite: recurrence coefficients from an LDL^T
// factorization of the moment matrix, nodes and weights from the Jacobi
// matrix eigensystem.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

template <typename T>
GaussRule gauss_from_moments(const std::vector<T>& s, int n);

// Coefficients (low to high, monic) of the degree-n orthogonal polynomial
// of the moment functional s, i.e. the polynomial whose roots are the
// nodes of gauss_from_moments(s, n).
template <typename T>
std::vector<T> orthogonal_polynomial(const std::vector<T>& s, int n);

}  // namespace eos
