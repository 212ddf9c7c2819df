#pragma once

// Decisions for the three membership questions that reduce to a truncated
// moment problem on the open interval (0, 1):
//   * is beta_1 < ... < beta_n a vector of expected order statistics,
//   * is p a mixture of Binomial(n, V) laws with 0 < V < 1,
//   * is u in the convex hull of the open moment curve {(1, t, ..., t^n)}.
//
// A moment vector has a representing measure inside (0, 1) iff it has one on
// some [eps, 1 - eps]. Rather than searching over eps, the pipeline builds
// the measure: interior moment points (both Hankel matrices definite) always
// admit one, and boundary points have a unique measure on [0, 1] whose
// support is inspected directly. The witness eps is half the support gap.

#include <optional>
#include <vector>

#include "eos/hankel.hpp"
#include "eos/moment_core.hpp"
#include "eos/recovery.hpp"

namespace eos {

enum class FeasibilityStatus { Feasible, Infeasible };

enum class VerdictReason {
  LowOrder,                 // n = 2 or 3: every increasing vector qualifies
  StrictDefinite,           // both Hankel matrices positive definite
  OpenSupportDeterminate,   // singular but PSD, unique measure avoids {0, 1}
  NecessaryPsdFailed,       // a Hankel matrix is indefinite at eps = 0
  BoundaryAtomAtEndpoint,   // unique measure charges 0 or 1
  ClosedFormN4,
  ClosedFormN5,
};

const char* to_string(FeasibilityStatus s);
const char* to_string(VerdictReason r);

struct FeasibilityVerdict {
  FeasibilityStatus status = FeasibilityStatus::Infeasible;
  VerdictReason reason = VerdictReason::NecessaryPsdFailed;
  std::optional<Number> epsilon_witness;
  std::optional<AtomicMeasure> certificate;
  // For BoundaryAtomAtEndpoint: the unique representing measure on [0, 1].
  std::optional<AtomicMeasure> endpoint_measure;
  // min(t_min, 1 - t_max) of the recovered measure, when one was built.
  std::optional<double> boundary_distance;
  // Set when every sign decision was made in rational arithmetic.
  bool exact = false;

  bool feasible() const { return status == FeasibilityStatus::Feasible; }
};

// Shared pipeline on a moment vector s_0 = 1, s_1..s_d with d >= 2.
// Throws RecoveryFailed on numerical breakdown of the certificate and
// RankDetectionAmbiguous when the singular branch cannot be resolved.
template <typename T>
FeasibilityVerdict decide_open_moment_problem(const std::vector<T>& moments, double tol = kDefaultTol);

template <typename T>
FeasibilityVerdict check_eos(const BetaSequence<T>& beta, double tol = kDefaultTol);

// (beta2 - beta1)(beta4 - beta3) >= (2/3)^2 (beta3 - beta2)^2. Throws WrongLength.
template <typename T>
FeasibilityVerdict check_ns_n4(const BetaSequence<T>& beta);

// With L = 2(b2-b1)(b4-b3) - (b3-b2)^2 and R = 2(b3-b2)(b5-b4) - (b4-b3)^2:
// feasible iff both are positive or both vanish. Throws WrongLength.
template <typename T>
FeasibilityVerdict check_n5(const BetaSequence<T>& beta);

template <typename T>
FeasibilityVerdict check_mixture(const ProbabilityVector<T>& p, double tol = kDefaultTol);

// Requires u_0 = 1 and n >= 1.
template <typename T>
FeasibilityVerdict check_moment_hull(const std::vector<T>& u, double tol = kDefaultTol);

}  // namespace eos
