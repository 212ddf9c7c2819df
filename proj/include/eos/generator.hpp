#pragma once

// The map T -> X between laws T on (0, 1) and normalized laws X
// (E X = 0, E max(X1, X2) = 1) whose spacings of expected order statistics
// are binomial moments of T, and its inverse X -> T.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "eos/number.hpp"
#include "eos/oracle.hpp"
#include "eos/quadrature.hpp"
#include "eos/recovery.hpp"

namespace eos {

enum class LawKind { Atomic, Beta, Uniform, Degenerate, Density };

const char* to_string(LawKind k);

class MixingDistribution {
 public:
  // Density on (0, 1), called as f(t, 1 - t) so both tails stay accurate.
  using DensityFn = std::function<double(double, double)>;

  static MixingDistribution atomic(AtomicMeasure measure);
  static MixingDistribution beta(double a, double b);
  static MixingDistribution uniform();
  static MixingDistribution degenerate(Number rho);
  static MixingDistribution from_density(DensityFn f, std::string label = "density");

  LawKind kind() const { return kind_; }
  bool has_density() const { return kind_ == LawKind::Beta || kind_ == LawKind::Uniform || kind_ == LawKind::Density; }
  double beta_a() const { return a_; }
  double beta_b() const { return b_; }
  const Number& rho() const { return rho_; }
  const std::string& label() const { return label_; }

  // Atomic and Degenerate only.
  AtomicMeasure atoms() const;

  double density(double t, double one_minus_t) const;
  double density(double t) const { return density(t, 1.0 - t); }
  // f_T(t) t^pu (1 - t)^pv at t = sigmoid(s), without underflow of t or 1 - t.
  double density_at_logit(double s, double pu = 0, double pv = 0) const;
  // Pr(T < t)
  double cdf_left(double t) const;
  double moment(int k) const;
  // E T^k, exact for rational atomic laws.
  Number moment_number(int k) const;

 private:
  MixingDistribution() = default;

  LawKind kind_ = LawKind::Uniform;
  double a_ = 1;
  double b_ = 1;
  double log_beta_ = 0;
  Number rho_;
  AtomicMeasure measure_;
  DensityFn density_;
  std::string label_;
};

enum class ClosedFormTag { UniformInterval, ShiftedExponential, ReflectedExponential, Logistic };

const char* to_string(ClosedFormTag tag);

enum class QuantileKind { Step, ClosedForm, FromT };

class QuantileFunction {
 public:
  // Quantile of a finitely supported law. Masses must sum to 1.
  static QuantileFunction step(std::vector<Number> values, std::vector<Number> masses);
  static QuantileFunction two_point(Number low, Number low_mass, Number high);
  // UniformInterval(lo, hi):            lo + (hi - lo) t
  // ShiftedExponential(shift, scale):   shift - scale log(1 - t)
  // ReflectedExponential(shift, scale): shift + scale log t
  // Logistic(location, scale):          location + scale log(t / (1 - t))
  static QuantileFunction closed_form(ClosedFormTag tag, double p1, double p2);
  static QuantileFunction from_T(MixingDistribution t, double c_t, QuadratureSettings settings = {});

  QuantileKind kind() const { return kind_; }
  double operator()(double t) const;

  // Step
  const std::vector<Number>& values() const { return values_; }
  const std::vector<Number>& masses() const { return masses_; }
  bool exact() const;
  DiscreteDistribution<Rational> discrete_exact() const;
  DiscreteDistribution<double> discrete() const;

  // ClosedForm
  ClosedFormTag tag() const { return tag_; }
  double p1() const { return p1_; }
  double p2() const { return p2_; }
  // d/dt of the quantile at t, given t and 1 - t.
  double derivative(double t, double one_minus_t) const;
  // t (1 - t) times the derivative, finite up to the endpoints.
  double spread(double t, double one_minus_t) const;

  // FromT
  const MixingDistribution& mixing() const { return *mixing_; }
  double c_t() const { return c_t_; }

  // Evaluation in logit coordinates: F^{-1}(sigmoid(s)).
  double at_logit(double s) const;

 private:
  QuantileFunction() = default;

  QuantileKind kind_ = QuantileKind::Step;
  std::vector<Number> values_;
  std::vector<Number> masses_;
  std::vector<double> breaks_;  // cumulative masses, as doubles
  ClosedFormTag tag_ = ClosedFormTag::UniformInterval;
  double p1_ = 0;
  double p2_ = 0;
  std::optional<MixingDistribution> mixing_;
  double c_t_ = 0;
  QuadratureSettings settings_;
};

// E[1/T ; T >= 1/2] - E[1/(1 - T) ; T < 1/2]
Number compute_cT(const MixingDistribution& t);

QuantileFunction quantile_from_T(const MixingDistribution& t);

// 1,001 points 1/2002, 3/2002, ..., 2001/2002.
std::vector<double> default_grid(int points = 1001);

struct TransformResult {
  Number lambda;
  std::vector<double> grid;
  std::vector<double> cdf;                    // Pr(T < t) on the grid
  std::optional<std::vector<double>> density; // when the quantile is differentiable
  std::optional<AtomicMeasure> atoms;         // when X is finitely supported
  MixingDistribution law;
};

// Throws DegenerateInput when lambda <= tol.
TransformResult T_from_X(const QuantileFunction& q, const std::vector<double>& grid = default_grid(),
                         double tol = 1e-12);

struct MaxMoments {
  std::vector<Number> values;  // values[k - 1] = E X_{k:k}
  const Number& mu(int k) const { return values.at(k - 1); }
};

MaxMoments max_moments(const QuantileFunction& q, int kmax);

struct Lemma1Report {
  double mu1 = 0;                   // |mu_1|
  std::vector<double> deviations;   // |mu_{k+2} - mu_{k+1} - E T^k|, k = 0..K
  double max_deviation = 0;
  bool exact = false;
  bool passed = false;
};

Lemma1Report verify_lemma1(const MixingDistribution& t, int kmax, double tol);

}  // namespace eos
