#include "eos/generator.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>

#include "eos/error.hpp"

namespace eos {

const char* to_string(LawKind k) {
  switch (k) {
    case LawKind::Atomic: return "atomic";
    case LawKind::Beta: return "beta";
    case LawKind::Uniform: return "uniform";
    case LawKind::Degenerate: return "degenerate";
    case LawKind::Density: return "density";
  }
  return "unknown";
}

const char* to_string(ClosedFormTag tag) {
  switch (tag) {
    case ClosedFormTag::UniformInterval: return "uniform";
    case ClosedFormTag::ShiftedExponential: return "shifted-exponential";
    case ClosedFormTag::ReflectedExponential: return "reflected-exponential";
    case ClosedFormTag::Logistic: return "logistic";
  }
  return "unknown";
}

namespace {

// Inner integrals run over long stretches of the real line; fixed breakpoints
// keep the adaptive rule from stepping over the bulk near the origin.
double integrate_line(const std::function<double(double)>& f, double a, double b, const QuadratureSettings& qs) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_line(f, b, a, qs);
  static const double kBreaks[] = {-40.0, -8.0, 0.0, 8.0, 40.0};
  double total = 0;
  double lo = a;
  for (double br : kBreaks) {
    if (br > lo && br < b) {
      total += integrate(f, lo, br, qs);
      lo = br;
    }
  }
  total += integrate(f, lo, b, qs);
  return total;
}

double softplus(double s) { return s > 0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s)); }

template <typename T>
T pow_int(const T& x, int k) {
  T r(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

template <typename T>
std::vector<T> as_scalars(const std::vector<Number>& xs) {
  return from_numbers<T>(xs);
}

void require_open_unit(const Number& x, const char* what) {
  const bool inside = x.exact() ? (x.rational() > 0 && x.rational() < 1) : (x.value() > 0 && x.value() < 1);
  if (!inside) throw Error(ErrorCode::InvalidSequence, std::string(what) + " must lie in (0, 1)");
}

const QuadratureSettings kInner{1e-13, 60};
const QuadratureSettings kOuter{1e-11, 60};

}  // namespace

MixingDistribution MixingDistribution::atomic(AtomicMeasure measure) {
  if (measure.empty()) throw Error(ErrorCode::InvalidSequence, "atomic law needs at least one atom");
  for (const Atom& a : measure.atoms()) require_open_unit(a.location, "atoms of T");
  MixingDistribution d;
  d.kind_ = LawKind::Atomic;
  d.measure_ = std::move(measure);
  d.label_ = "atomic";
  return d;
}

MixingDistribution MixingDistribution::beta(double a, double b) {
  if (!(a > 0) || !(b > 0) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidSequence, "beta shapes must be positive");
  }
  MixingDistribution d;
  d.kind_ = LawKind::Beta;
  d.a_ = a;
  d.b_ = b;
  d.log_beta_ = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  d.label_ = "beta";
  return d;
}

MixingDistribution MixingDistribution::uniform() {
  MixingDistribution d;
  d.kind_ = LawKind::Uniform;
  d.label_ = "uniform";
  return d;
}

MixingDistribution MixingDistribution::degenerate(Number rho) {
  require_open_unit(rho, "rho");
  MixingDistribution d;
  d.kind_ = LawKind::Degenerate;
  d.rho_ = rho;
  d.measure_ = AtomicMeasure({Atom{rho, Number(1)}});
  d.label_ = "degenerate";
  return d;
}

MixingDistribution MixingDistribution::from_density(DensityFn f, std::string label) {
  MixingDistribution d;
  d.kind_ = LawKind::Density;
  d.density_ = std::move(f);
  d.label_ = std::move(label);
  return d;
}

AtomicMeasure MixingDistribution::atoms() const {
  if (kind_ != LawKind::Atomic && kind_ != LawKind::Degenerate) {
    throw Error(ErrorCode::InvalidSequence, "law has no atoms");
  }
  return measure_;
}

double MixingDistribution::density(double t, double one_minus_t) const {
  switch (kind_) {
    case LawKind::Uniform: return 1.0;
    case LawKind::Beta:
      if (t <= 0 || one_minus_t <= 0) return 0.0;
      return std::exp((a_ - 1) * std::log(t) + (b_ - 1) * std::log(one_minus_t) - log_beta_);
    case LawKind::Density: return density_(t, one_minus_t);
    default: throw Error(ErrorCode::InvalidSequence, "law has no density");
  }
}

double MixingDistribution::density_at_logit(double s, double pu, double pv) const {
  if (kind_ == LawKind::Beta) {
    // log sigmoid(s) = -softplus(-s), log(1 - sigmoid(s)) = -softplus(s)
    return std::exp(-(a_ - 1 + pu) * softplus(-s) - (b_ - 1 + pv) * softplus(s) - log_beta_);
  }
  const double u = sigmoid(s);
  const double v = sigmoid_complement(s);
  const double w = std::pow(u, pu) * std::pow(v, pv);
  return w == 0.0 ? 0.0 : density(u, v) * w;
}

double MixingDistribution::cdf_left(double t) const {
  if (t <= 0) return 0.0;
  if (t >= 1) return 1.0;
  switch (kind_) {
    case LawKind::Atomic:
    case LawKind::Degenerate: {
      double total = 0;
      for (const Atom& a : measure_.atoms()) {
        if (a.location.value() < t) total += a.weight.value();
      }
      return total;
    }
    case LawKind::Uniform: return t;
    case LawKind::Beta: return boost::math::ibeta(a_, b_, t);
    case LawKind::Density: {
      auto f = [this](double s) {
        return density_at_logit(s, 1, 1);
      };
      return integrate_line(f, -kInf, logit(t), kInner);
    }
  }
  return 0.0;
}

double MixingDistribution::moment(int k) const {
  switch (kind_) {
    case LawKind::Atomic:
    case LawKind::Degenerate: return measure_.moment(k);
    case LawKind::Uniform: return 1.0 / (k + 1);
    case LawKind::Beta: {
      double r = 1;
      for (int i = 0; i < k; ++i) r *= (a_ + i) / (a_ + b_ + i);
      return r;
    }
    case LawKind::Density: {
      auto f = [this, k](double s) {
        return density_at_logit(s, k + 1, 1);
      };
      return integrate_line(f, -kInf, kInf, kInner);
    }
  }
  return 0.0;
}

Number MixingDistribution::moment_number(int k) const {
  if ((kind_ == LawKind::Atomic || kind_ == LawKind::Degenerate) && measure_.exact()) {
    return Number(measure_.exact_moment(k));
  }
  return Number(moment(k));
}

// ---------------------------------------------------------------- quantiles

QuantileFunction QuantileFunction::step(std::vector<Number> values, std::vector<Number> masses) {
  if (values.empty() || values.size() != masses.size()) {
    throw Error(ErrorCode::InvalidSequence, "step quantile needs matching values and masses");
  }
  QuantileFunction q;
  q.kind_ = QuantileKind::Step;
  // Validation and cumulative masses through the oracle's distribution type.
  if (all_exact(values) && all_exact(masses)) {
    DiscreteDistribution<Rational> d(as_scalars<Rational>(values), as_scalars<Rational>(masses));
    for (const Rational& c : d.cdf()) q.breaks_.push_back(c.get_d());
  } else {
    DiscreteDistribution<double> d(as_scalars<double>(values), as_scalars<double>(masses));
    q.breaks_ = d.cdf();
  }
  q.values_ = std::move(values);
  q.masses_ = std::move(masses);
  return q;
}

QuantileFunction QuantileFunction::two_point(Number low, Number low_mass, Number high) {
  Number high_mass = low_mass.exact() ? Number(Rational(1 - low_mass.rational())) : Number(1.0 - low_mass.value());
  return step({low, high}, {low_mass, high_mass});
}

QuantileFunction QuantileFunction::closed_form(ClosedFormTag tag, double p1, double p2) {
  if (!std::isfinite(p1) || !std::isfinite(p2)) throw Error(ErrorCode::InvalidSequence, "parameters must be finite");
  const bool ok = tag == ClosedFormTag::UniformInterval ? p2 > p1 : p2 > 0;
  if (!ok) throw Error(ErrorCode::InvalidSequence, "closed-form quantile must be strictly increasing");
  QuantileFunction q;
  q.kind_ = QuantileKind::ClosedForm;
  q.tag_ = tag;
  q.p1_ = p1;
  q.p2_ = p2;
  return q;
}

QuantileFunction QuantileFunction::from_T(MixingDistribution t, double c_t, QuadratureSettings settings) {
  if (!t.has_density()) throw Error(ErrorCode::InvalidSequence, "integral form needs a law with a density");
  QuantileFunction q;
  q.kind_ = QuantileKind::FromT;
  q.mixing_ = std::move(t);
  q.c_t_ = c_t;
  q.settings_ = settings;
  return q;
}

bool QuantileFunction::exact() const {
  return kind_ == QuantileKind::Step && all_exact(values_) && all_exact(masses_);
}

DiscreteDistribution<Rational> QuantileFunction::discrete_exact() const {
  if (!exact()) throw Error(ErrorCode::InvalidSequence, "quantile is not an exact step function");
  return DiscreteDistribution<Rational>(as_scalars<Rational>(values_), as_scalars<Rational>(masses_));
}

DiscreteDistribution<double> QuantileFunction::discrete() const {
  if (kind_ != QuantileKind::Step) throw Error(ErrorCode::InvalidSequence, "quantile is not a step function");
  return DiscreteDistribution<double>(as_scalars<double>(values_), as_scalars<double>(masses_));
}

double QuantileFunction::operator()(double t) const {
  switch (kind_) {
    case QuantileKind::Step: {
      const auto it = std::lower_bound(breaks_.begin(), breaks_.end(), t);
      const std::size_t j = std::min<std::size_t>(it - breaks_.begin(), values_.size() - 1);
      return values_[j].value();
    }
    case QuantileKind::ClosedForm:
      switch (tag_) {
        case ClosedFormTag::UniformInterval: return p1_ + (p2_ - p1_) * t;
        case ClosedFormTag::ShiftedExponential: return p1_ - p2_ * std::log1p(-t);
        case ClosedFormTag::ReflectedExponential: return p1_ + p2_ * std::log(t);
        case ClosedFormTag::Logistic: return p1_ + p2_ * logit(t);
      }
      break;
    case QuantileKind::FromT: return at_logit(logit(t));
  }
  return 0.0;
}

double QuantileFunction::at_logit(double s) const {
  switch (kind_) {
    case QuantileKind::Step: return (*this)(sigmoid(s));
    case QuantileKind::ClosedForm:
      switch (tag_) {
        case ClosedFormTag::UniformInterval: return p1_ + (p2_ - p1_) * sigmoid(s);
        case ClosedFormTag::ShiftedExponential: return p1_ + p2_ * softplus(s);
        case ClosedFormTag::ReflectedExponential: return p1_ - p2_ * softplus(-s);
        case ClosedFormTag::Logistic: return p1_ + p2_ * s;
      }
      break;
    case QuantileKind::FromT: {
      // F^{-1}(t) = int_{1/2}^t f_T(u) / (u (1 - u)) du - c_T, and du / (u (1 - u)) = ds.
      const MixingDistribution& law = *mixing_;
      auto f = [&law](double r) { return law.density_at_logit(r); };
      return integrate_line(f, 0.0, s, settings_) - c_t_;
    }
  }
  return 0.0;
}

double QuantileFunction::spread(double t, double one_minus_t) const {
  switch (kind_) {
    case QuantileKind::ClosedForm:
      switch (tag_) {
        case ClosedFormTag::UniformInterval: return (p2_ - p1_) * t * one_minus_t;
        case ClosedFormTag::ShiftedExponential: return p2_ * t;
        case ClosedFormTag::ReflectedExponential: return p2_ * one_minus_t;
        case ClosedFormTag::Logistic: return p2_;
      }
      break;
    case QuantileKind::FromT: return mixing_->density(t, one_minus_t);
    case QuantileKind::Step: break;
  }
  throw Error(ErrorCode::InvalidSequence, "step quantile has no derivative");
}

double QuantileFunction::derivative(double t, double one_minus_t) const {
  switch (kind_) {
    case QuantileKind::ClosedForm:
      switch (tag_) {
        case ClosedFormTag::UniformInterval: return p2_ - p1_;
        case ClosedFormTag::ShiftedExponential: return p2_ / one_minus_t;
        case ClosedFormTag::ReflectedExponential: return p2_ / t;
        case ClosedFormTag::Logistic: return p2_ / (t * one_minus_t);
      }
      break;
    case QuantileKind::FromT: return mixing_->density(t, one_minus_t) / (t * one_minus_t);
    case QuantileKind::Step: break;
  }
  throw Error(ErrorCode::InvalidSequence, "step quantile has no derivative");
}

// ------------------------------------------------------------------- c_T

namespace {

template <typename T>
Number atomic_cT(const AtomicMeasure& m) {
  const T half = T(1) / T(2);
  T c(0);
  for (const Atom& a : m.atoms()) {
    const T t = a.location.as<T>();
    const T w = a.weight.as<T>();
    if (t >= half) {
      c += w / t;
    } else {
      c -= w / (T(1) - t);
    }
  }
  return Number(c);
}

// Values of X on the gaps between consecutive atoms of T. With the atoms
// t_1 < ... < t_m the quantile is constant on (t_j, t_{j+1}]; its value there
// is the finite sum of the jumps w / (t (1 - t)) between 1/2 and the gap,
// shifted by -c_T.
template <typename T>
QuantileFunction atomic_quantile(const AtomicMeasure& m) {
  const T half = T(1) / T(2);
  const T c = atomic_cT<T>(m).template as<T>();
  std::vector<T> loc;
  std::vector<T> jump;
  for (const Atom& a : m.atoms()) {
    const T t = a.location.as<T>();
    loc.push_back(t);
    jump.push_back(a.weight.as<T>() / (t * (T(1) - t)));
  }
  std::vector<Number> values;
  std::vector<Number> masses;
  T left(0);
  for (std::size_t j = 0; j <= loc.size(); ++j) {
    const T right = j < loc.size() ? loc[j] : T(1);
    T v(0);
    if (right > half) {
      for (std::size_t l = 0; l < loc.size(); ++l) {
        if (loc[l] >= half && loc[l] < right) v += jump[l];
      }
    } else {
      for (std::size_t l = 0; l < loc.size(); ++l) {
        if (loc[l] >= right && loc[l] < half) v -= jump[l];
      }
    }
    values.emplace_back(T(v - c));
    masses.emplace_back(T(right - left));
    left = right;
  }
  return QuantileFunction::step(std::move(values), std::move(masses));
}

}  // namespace

Number compute_cT(const MixingDistribution& t) {
  if (t.kind() == LawKind::Atomic || t.kind() == LawKind::Degenerate) {
    const AtomicMeasure m = t.atoms();
    return m.exact() ? atomic_cT<Rational>(m) : atomic_cT<double>(m);
  }
  // du / u = (1 - u) ds and du / (1 - u) = u ds in logit coordinates.
  auto upper = [&t](double s) { return t.density_at_logit(s, 0, 1); };
  auto lower = [&t](double s) { return t.density_at_logit(s, 1, 0); };
  return Number(integrate_line(upper, 0.0, kInf, kInner) - integrate_line(lower, -kInf, 0.0, kInner));
}

QuantileFunction quantile_from_T(const MixingDistribution& t) {
  if (t.kind() == LawKind::Atomic || t.kind() == LawKind::Degenerate) {
    const AtomicMeasure m = t.atoms();
    return m.exact() ? atomic_quantile<Rational>(m) : atomic_quantile<double>(m);
  }
  return QuantileFunction::from_T(t, compute_cT(t).value(), kInner);
}

std::vector<double> default_grid(int points) {
  if (points < 1) throw Error(ErrorCode::InvalidSequence, "grid needs at least one point");
  std::vector<double> g;
  g.reserve(points);
  for (int i = 0; i < points; ++i) g.push_back((2.0 * i + 1.0) / (2.0 * points));
  return g;
}

// ---------------------------------------------------------------- X -> T

namespace {

// For a step quantile the map is exact: T has an atom at each interior
// cumulative mass c_j with weight c_j (1 - c_j)(v_{j+1} - v_j) / lambda.
template <typename T>
TransformResult step_transform(const QuantileFunction& q, const std::vector<double>& grid, double tol) {
  const std::vector<T> v = as_scalars<T>(q.values());
  const std::vector<T> w = as_scalars<T>(q.masses());
  std::vector<T> c;
  T acc(0);
  for (const T& x : w) {
    acc += x;
    c.push_back(acc);
  }
  c.back() = T(1);
  T lambda(0);
  T prev(0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    lambda += v[j] * ((c[j] * c[j] - c[j]) - (prev * prev - prev));
    prev = c[j];
  }
  if (!(to_double(lambda) > tol)) throw Error(ErrorCode::DegenerateInput, "lambda vanishes: X is degenerate");
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    const T weight = c[j] * (T(1) - c[j]) * (v[j + 1] - v[j]) / lambda;
    atoms.push_back(Atom{Number(c[j]), Number(weight)});
  }
  AtomicMeasure measure(std::move(atoms));
  MixingDistribution law = MixingDistribution::atomic(measure);
  TransformResult out{Number(lambda), grid, {}, std::nullopt, measure, law};
  out.cdf.reserve(grid.size());
  for (double t : grid) out.cdf.push_back(law.cdf_left(t));
  return out;
}

}  // namespace

TransformResult T_from_X(const QuantileFunction& q, const std::vector<double>& grid, double tol) {
  for (double t : grid) {
    if (!(t > 0 && t < 1)) throw Error(ErrorCode::InvalidSequence, "grid points must lie in (0, 1)");
  }
  if (q.kind() == QuantileKind::Step) {
    return q.exact() ? step_transform<Rational>(q, grid, tol) : step_transform<double>(q, grid, tol);
  }

  double lambda = 0;
  std::vector<double> cdf(grid.size());
  if (q.kind() == QuantileKind::ClosedForm) {
    // Pr(T < t) = [t (1 - t) F^{-1}(t) - int_0^t (1 - 2u) F^{-1}(u) du] / lambda,
    // simplified by hand for each family; the location parameter cancels.
    const double d = q.p2() - q.p1();
    const double scale = q.p2();
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double t = grid[i];
      switch (q.tag()) {
        case ClosedFormTag::UniformInterval: cdf[i] = t * t * (3.0 - 2.0 * t); break;
        case ClosedFormTag::ShiftedExponential: cdf[i] = t * t; break;
        case ClosedFormTag::ReflectedExponential: cdf[i] = t * (2.0 - t); break;
        case ClosedFormTag::Logistic: cdf[i] = t; break;
      }
    }
    switch (q.tag()) {
      case ClosedFormTag::UniformInterval: lambda = d / 6.0; break;
      case ClosedFormTag::ShiftedExponential:
      case ClosedFormTag::ReflectedExponential: lambda = scale / 2.0; break;
      case ClosedFormTag::Logistic: lambda = scale; break;
    }
  } else {
    auto lam = [&q](double s) {
      const double w = std::tanh(s / 2.0) * sigmoid(s) * sigmoid_complement(s);
      return w == 0.0 ? 0.0 : w * q.at_logit(s);
    };
    lambda = integrate_line(lam, -kInf, kInf, kOuter);
    if (!(lambda > tol)) throw Error(ErrorCode::DegenerateInput, "lambda vanishes: X is degenerate");
    auto g = [&q](double s) {
      const double w = -std::tanh(s / 2.0) * sigmoid(s) * sigmoid_complement(s);
      return w == 0.0 ? 0.0 : w * q.at_logit(s);
    };
    std::vector<std::size_t> order(grid.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&grid](std::size_t a, std::size_t b) { return grid[a] < grid[b]; });
    double acc = 0;
    double s_prev = -kInf;
    for (std::size_t idx : order) {
      const double s = logit(grid[idx]);
      acc += integrate_line(g, s_prev, s, kOuter);
      s_prev = s;
      const double t = grid[idx];
      cdf[idx] = (t * (1.0 - t) * q.at_logit(s) - acc) / lambda;
    }
  }
  if (!(lambda > tol)) throw Error(ErrorCode::DegenerateInput, "lambda vanishes: X is degenerate");

  // f_T(t) = t (1 - t) (F^{-1})'(t) / lambda
  auto density = [q, lambda](double t, double one_minus_t) { return q.spread(t, one_minus_t) / lambda; };
  std::vector<double> dens;
  dens.reserve(grid.size());
  for (double t : grid) dens.push_back(density(t, 1.0 - t));
  MixingDistribution law = MixingDistribution::from_density(density, "from-quantile");
  return TransformResult{Number(lambda), grid, std::move(cdf), std::move(dens), std::nullopt, std::move(law)};
}

// ------------------------------------------------------------ max-moments

namespace {

template <typename T>
MaxMoments step_max_moments(const QuantileFunction& q, int kmax) {
  const std::vector<T> v = as_scalars<T>(q.values());
  const std::vector<T> w = as_scalars<T>(q.masses());
  MaxMoments out;
  for (int k = 1; k <= kmax; ++k) {
    // E max = sum_j v_j (c_j^k - c_{j-1}^k)
    T mu(0);
    T prev(0);
    T acc(0);
    for (std::size_t j = 0; j < v.size(); ++j) {
      acc += w[j];
      const T cur = j + 1 == v.size() ? T(1) : acc;
      const T ck = pow_int<T>(cur, k);
      mu += v[j] * (ck - prev);
      prev = ck;
    }
    out.values.emplace_back(mu);
  }
  return out;
}

double harmonic(int k) {
  double h = 0;
  for (int i = 1; i <= k; ++i) h += 1.0 / i;
  return h;
}

}  // namespace

MaxMoments max_moments(const QuantileFunction& q, int kmax) {
  if (kmax < 1) throw Error(ErrorCode::InvalidSequence, "kmax must be at least 1");
  if (q.kind() == QuantileKind::Step) {
    return q.exact() ? step_max_moments<Rational>(q, kmax) : step_max_moments<double>(q, kmax);
  }
  MaxMoments out;
  for (int k = 1; k <= kmax; ++k) {
    double mu = 0;
    if (q.kind() == QuantileKind::ClosedForm) {
      switch (q.tag()) {
        case ClosedFormTag::UniformInterval: mu = q.p1() + (q.p2() - q.p1()) * k / (k + 1.0); break;
        case ClosedFormTag::ShiftedExponential: mu = q.p1() + q.p2() * harmonic(k); break;
        case ClosedFormTag::ReflectedExponential: mu = q.p1() - q.p2() / k; break;
        case ClosedFormTag::Logistic: mu = q.p1() + q.p2() * harmonic(k - 1); break;
      }
    } else {
      // k int_0^1 u^{k-1} F^{-1}(u) du with u = sigmoid(s)
      auto f = [&q, k](double s) {
        // The weight vanishes faster than the quantile grows; skip the
        // quantile where the weight has underflowed.
        const double w = k * std::pow(sigmoid(s), k) * sigmoid_complement(s);
        return w == 0.0 ? 0.0 : w * q.at_logit(s);
      };
      mu = integrate_line(f, -kInf, kInf, kOuter);
    }
    out.values.emplace_back(mu);
  }
  return out;
}

Lemma1Report verify_lemma1(const MixingDistribution& t, int kmax, double tol) {
  if (kmax < 0) throw Error(ErrorCode::InvalidSequence, "K must be nonnegative");
  const QuantileFunction q = quantile_from_T(t);
  const MaxMoments mm = max_moments(q, kmax + 2);
  Lemma1Report report;
  bool exact = all_exact(mm.values);
  std::vector<Number> tm;
  for (int k = 0; k <= kmax; ++k) {
    tm.push_back(t.moment_number(k));
    exact = exact && tm.back().exact();
  }
  report.exact = exact;
  if (exact) {
    report.mu1 = to_double(abs(mm.mu(1).rational()));
    for (int k = 0; k <= kmax; ++k) {
      const Rational dev = mm.mu(k + 2).rational() - mm.mu(k + 1).rational() - tm[k].rational();
      report.deviations.push_back(to_double(abs(dev)));
    }
  } else {
    report.mu1 = std::fabs(mm.mu(1).value());
    for (int k = 0; k <= kmax; ++k) {
      report.deviations.push_back(std::fabs(mm.mu(k + 2).value() - mm.mu(k + 1).value() - tm[k].value()));
    }
  }
  for (double d : report.deviations) report.max_deviation = std::max(report.max_deviation, d);
  report.passed = report.mu1 <= tol && report.max_deviation <= tol;
  return report;
}

}  // namespace eos
