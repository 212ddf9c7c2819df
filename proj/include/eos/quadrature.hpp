#pragma once

// Adaptive Gauss-Kronrod on finite or infinite intervals. Improper integrals
// over (0, 1) are taken in logit coordinates s = log(u / (1 - u)), which
// turns endpoint singularities of the generator integrands into tails.

#include <functional>
#include <limits>

namespace eos {

struct QuadratureSettings {
  double rel_tol = 1e-12;
  unsigned max_depth = 60;
};

// Throws IntegrationFailure if the error estimate exceeds
// rel_tol * L1 + abs_floor or the integrand produces a non-finite value.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureSettings& settings = {}, double abs_floor = 1e-15);

// Logistic sigmoid and its complement, each computed without cancellation.
double sigmoid(double s);
inline double sigmoid_complement(double s) { return sigmoid(-s); }
double logit(double u);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace eos
