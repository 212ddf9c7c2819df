#include "eos/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "eos/eigen.hpp"
#include "eos/linalg.hpp"

namespace eos {

namespace {

constexpr double kMassTol = 1e-9;
constexpr double kClampTol = 1e-12;
constexpr double kRankZero = 1e-10;
constexpr double kAmbiguousLow = 1e-12;
constexpr double kAmbiguousHigh = 1e-8;
constexpr long kMaxRationalDen = 1000000;

bool less_than(const Number& a, const Number& b) {
  if (a.exact() && b.exact()) return a.rational() < b.rational();
  return a.value() < b.value();
}

// Localizing polynomial of the singular moment matrix whose kernel carries
// the support: 1, t, 1 - t, or t(1 - t).
enum class Localizer { None, Lower, Upper, Both };

template <typename T>
std::vector<T> localized(const std::vector<T>& s, Localizer loc) {
  std::vector<T> out;
  const int d = static_cast<int>(s.size()) - 1;
  switch (loc) {
    case Localizer::None:
      return s;
    case Localizer::Lower:
      for (int k = 0; k + 1 <= d; ++k) out.push_back(s[k + 1]);
      break;
    case Localizer::Upper:
      for (int k = 0; k + 1 <= d; ++k) out.push_back(T(s[k] - s[k + 1]));
      break;
    case Localizer::Both:
      for (int k = 0; k + 2 <= d; ++k) out.push_back(T(s[k + 1] - s[k + 2]));
      break;
  }
  return out;
}

double localizer_value(Localizer loc, double x) {
  switch (loc) {
    case Localizer::None: return 1.0;
    case Localizer::Lower: return x;
    case Localizer::Upper: return 1.0 - x;
    case Localizer::Both: return x * (1.0 - x);
  }
  return 1.0;
}

// Admissible interval for s_{2m+1} given s_0..s_{2m} interior to the moment
// space of [0, 1]; returns its midpoint.
template <typename T>
T midpoint_extension(const std::vector<T>& s) {
  const int m = (static_cast<int>(s.size()) - 1) / 2;
  std::vector<T> lower_m, upper_m, r(m), q(m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      lower_m.push_back(s[i + j + 1]);
      upper_m.push_back(T(s[i + j] - s[i + j + 1]));
    }
    r[i] = s[i + m + 1];
    q[i] = T(s[i + m] - s[i + m + 1]);
  }
  const std::vector<T> x = solve_linear(lower_m, r);
  const std::vector<T> y = solve_linear(upper_m, q);
  T lower = 0, upper = s[2 * m];
  for (int i = 0; i < m; ++i) {
    lower += r[i] * x[i];
    upper -= q[i] * y[i];
  }
  if (!(lower < upper)) throw Error(ErrorCode::NotRepresentable, "moment vector is not interior");
  return T((lower + upper) / T(2));
}

// Numerical rank of a PSD matrix; eigenvalues in the ambiguity band are an
// error rather than a guess.
int floating_rank(const SymMatrix<double>& m) {
  const SymEigen eig = jacobi_eigen(m);
  double sigma = 0;
  for (double v : eig.values) sigma = std::max(sigma, std::fabs(v));
  int rank = 0;
  for (double v : eig.values) {
    const double rel = std::fabs(v) / sigma;
    if (rel >= kAmbiguousLow && rel <= kAmbiguousHigh) {
      throw Error(ErrorCode::RankDetectionAmbiguous,
                  "eigenvalue ratio " + format_double(rel) + " lies in the rank ambiguity band [1e-12, 1e-8]");
    }
    if (rel > kRankZero) ++rank;
  }
  return rank;
}

template <typename T>
int matrix_rank(const SymMatrix<T>& m) {
  if constexpr (is_exact_v<T>) {
    return ldl_classify(m).rank;
  } else {
    return floating_rank(m);
  }
}

double clamp_node(double x) {
  if (x < 0.0) {
    if (x < -kClampTol) throw Error(ErrorCode::NotRepresentable, "node " + format_double(x) + " below 0");
    return 0.0;
  }
  if (x > 1.0) {
    if (x > 1.0 + kClampTol) throw Error(ErrorCode::NotRepresentable, "node " + format_double(x) + " above 1");
    return 1.0;
  }
  return x;
}

struct Candidate {
  Number location;
  Number weight;
};

// Interior part of the measure from the Gauss rule of the localized
// moments; exact when every node is a rational root of the orthogonal
// polynomial.
template <typename T>
std::vector<Candidate> interior_atoms(const std::vector<T>& s, int count, Localizer loc) {
  std::vector<Candidate> out;
  if (count == 0) return out;
  const GaussRule rule = gauss_from_moments(s, count);
  if constexpr (is_exact_v<T>) {
    const std::vector<Rational> q = orthogonal_polynomial(s, count);
    std::vector<Rational> roots;
    for (double x : rule.nodes) {
      Rational r;
      if (!rationalize(x, kMaxRationalDen, 1e-9, r) || sgn(poly_eval(q, r)) != 0) break;
      roots.push_back(r);
    }
    if (static_cast<int>(roots.size()) == count) {
      std::vector<Rational> vandermonde;
      std::vector<Rational> rhs(s.begin(), s.begin() + count);
      for (int k = 0; k < count; ++k) {
        for (int i = 0; i < count; ++i) {
          Rational p = 1;
          for (int e = 0; e < k; ++e) p *= roots[i];
          vandermonde.push_back(p);
        }
      }
      const std::vector<Rational> w = solve_linear(vandermonde, rhs);
      for (int i = 0; i < count; ++i) {
        Rational loc_value = 1;
        switch (loc) {
          case Localizer::None: break;
          case Localizer::Lower: loc_value = roots[i]; break;
          case Localizer::Upper: loc_value = 1 - roots[i]; break;
          case Localizer::Both: loc_value = roots[i] * (1 - roots[i]); break;
        }
        if (sgn(loc_value) == 0 || sgn(w[i]) <= 0) {
          throw Error(ErrorCode::NotRepresentable, "degenerate localized weight");
        }
        out.push_back({Number(roots[i]), Number(Rational(w[i] / loc_value))});
      }
      return out;
    }
  }
  for (int i = 0; i < count; ++i) {
    const double x = clamp_node(rule.nodes[i]);
    const double lv = localizer_value(loc, x);
    if (!(rule.weights[i] > 0) || !(lv > 0)) {
      throw Error(ErrorCode::NotRepresentable, "non-positive quadrature weight");
    }
    out.push_back({Number(x), Number(rule.weights[i] / lv)});
  }
  return out;
}

template <typename T>
T functional(const std::vector<T>& moments, const std::vector<T>& coeffs) {
  T acc = 0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) acc += coeffs[k] * moments.at(k);
  return acc;
}

AtomicMeasure assemble(std::vector<Candidate> atoms, double tol) {
  std::vector<Atom> kept;
  for (auto& c : atoms) {
    if (c.weight.exact()) {
      if (sgn(c.weight.rational()) < 0) throw Error(ErrorCode::NotRepresentable, "negative endpoint mass");
      if (sgn(c.weight.rational()) == 0) continue;
    } else {
      if (c.weight.value() < -tol) throw Error(ErrorCode::NotRepresentable, "negative endpoint mass");
      if (c.weight.value() <= tol) continue;
    }
    kept.push_back({c.location, c.weight});
  }
  std::sort(kept.begin(), kept.end(), [](const Atom& a, const Atom& b) { return less_than(a.location, b.location); });
  // Merge numerically coincident nodes (floating path only).
  std::vector<Atom> merged;
  for (auto& a : kept) {
    if (!merged.empty() && !(less_than(merged.back().location, a.location))) {
      merged.back().weight = Number(merged.back().weight.value() + a.weight.value());
      continue;
    }
    merged.push_back(a);
  }
  // Renormalize floating weights so the mass check is not tripped by
  // rounding; the moment verification still sees the raw residuals.
  bool exact = true;
  double total = 0;
  for (auto& a : merged) {
    exact = exact && a.weight.exact() && a.location.exact();
    total += a.weight.value();
  }
  if (!exact && std::fabs(total - 1.0) <= kMassTol * 100 && total > 0) {
    for (auto& a : merged) {
      if (!a.weight.exact()) a.weight = Number(a.weight.value() / total);
    }
  }
  return AtomicMeasure(std::move(merged));
}

template <typename T>
void finish(Recovery& out, const std::vector<T>& moments, double tol) {
  const MeasureCheck check = verify_measure(out.measure, moments, std::max(tol, 1e-12));
  if (!check.ok) {
    throw Error(ErrorCode::NotRepresentable,
                "reconstructed measure misses the moments by " + format_double(check.max_residual));
  }
  out.boundary_distance = support_gap(out.measure).value();
  if (!out.exact) out.endpoint_atom = out.boundary_distance <= tol;
}

}  // namespace

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw Error(ErrorCode::InvalidSequence, "measure needs at least one atom");
  bool all_exact = true;
  Rational exact_total = 0;
  double total = 0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    const double t = a.location.value();
    const double w = a.weight.value();
    if (!std::isfinite(t) || !std::isfinite(w)) throw Error(ErrorCode::InvalidSequence, "non-finite atom");
    const bool outside = a.location.exact() ? (a.location.rational() < 0 || a.location.rational() > 1)
                                            : (t < 0.0 || t > 1.0);
    if (outside) throw Error(ErrorCode::InvalidSequence, "atom location outside [0, 1]");
    const bool nonpositive = a.weight.exact() ? sgn(a.weight.rational()) <= 0 : !(w > 0.0);
    if (nonpositive) throw Error(ErrorCode::NegativeMass, "atom weight must be positive");
    if (i > 0 && !less_than(atoms_[i - 1].location, a.location)) {
      throw Error(ErrorCode::InvalidSequence, "atom locations must be strictly increasing");
    }
    all_exact = all_exact && a.weight.exact();
    if (a.weight.exact()) exact_total += a.weight.rational();
    total += w;
  }
  if (all_exact ? exact_total != 1 : std::fabs(total - 1.0) > kMassTol) {
    throw Error(ErrorCode::MassNotOne, "atom weights must sum to one");
  }
}

bool AtomicMeasure::exact() const {
  return std::all_of(atoms_.begin(), atoms_.end(),
                     [](const Atom& a) { return a.location.exact() && a.weight.exact(); });
}

double AtomicMeasure::moment(int k) const {
  double acc = 0;
  for (const auto& a : atoms_) acc += a.weight.value() * std::pow(a.location.value(), k);
  return acc;
}

Rational AtomicMeasure::exact_moment(int k) const {
  Rational acc = 0;
  for (const auto& a : atoms_) {
    Rational p = 1;
    for (int e = 0; e < k; ++e) p *= a.location.rational();
    acc += a.weight.rational() * p;
  }
  return acc;
}

template <typename T>
MeasureCheck verify_measure(const AtomicMeasure& measure, const std::vector<T>& moments, double tol) {
  MeasureCheck out;
  out.ok = true;
  const bool exact = is_exact_v<T> && measure.exact();
  for (std::size_t k = 0; k < moments.size(); ++k) {
    double residual = 0;
    if (exact) {
      if constexpr (is_exact_v<T>) {
        residual = std::fabs(Rational(measure.exact_moment(static_cast<int>(k)) - moments[k]).get_d());
      }
    } else {
      residual = std::fabs(measure.moment(static_cast<int>(k)) - to_double(moments[k]));
    }
    out.max_residual = std::max(out.max_residual, residual);
    if (!(residual <= tol * std::max(1.0, std::fabs(to_double(moments[k]))))) out.ok = false;
  }
  return out;
}

template MeasureCheck verify_measure(const AtomicMeasure&, const std::vector<double>&, double);
template MeasureCheck verify_measure(const AtomicMeasure&, const std::vector<Rational>&, double);

Number support_gap(const AtomicMeasure& measure) {
  if (measure.empty()) throw Error(ErrorCode::InvalidSequence, "empty measure");
  const Number& lo = measure.atoms().front().location;
  const Number& hi = measure.atoms().back().location;
  if (lo.exact() && hi.exact()) {
    const Rational upper_gap = 1 - hi.rational();
    return Number(lo.rational() < upper_gap ? lo.rational() : upper_gap);
  }
  return Number(std::min(lo.value(), 1.0 - hi.value()));
}

template <typename T>
GaussRule gauss_from_moments(const std::vector<T>& s, int n) {
  if (n < 1 || static_cast<int>(s.size()) < 2 * n) {
    throw Error(ErrorCode::TooFewMoments, "Gauss rule of order " + std::to_string(n) + " needs " +
                                              std::to_string(2 * n) + " moments");
  }
  // Rows 0..n of the LDL^T factor of (s_{i+j})_{0..n}; d_n is never needed,
  // so the highest moment used is s_{2n-1}.
  std::vector<std::vector<T>> l(n + 1, std::vector<T>(n + 1, T(0)));
  std::vector<T> d(n, T(0));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < i; ++j) {
      T v = s[i + j];
      for (int k = 0; k < j; ++k) v -= l[i][k] * l[j][k] * d[k];
      l[i][j] = v / d[j];
    }
    if (i < n) {
      T v = s[2 * i];
      for (int k = 0; k < i; ++k) v -= l[i][k] * l[i][k] * d[k];
      if (!(v > 0)) throw Error(ErrorCode::NotRepresentable, "moment matrix is not positive definite");
      d[i] = v;
    }
  }
  SymMatrix<double> jacobi(n);
  for (int j = 0; j < n; ++j) {
    const T alpha = T(l[j + 1][j] - (j > 0 ? l[j][j - 1] : T(0)));
    jacobi.set(j, j, to_double(alpha));
    if (j + 1 < n) {
      const T beta_sq = d[j + 1] / d[j];
      jacobi.set(j, j + 1, std::sqrt(to_double(beta_sq)));
    }
  }
  const SymEigen eig = jacobi_eigen(jacobi);
  GaussRule rule;
  const double mass = to_double(s[0]);
  for (int k = 0; k < n; ++k) {
    rule.nodes.push_back(eig.values[k]);
    rule.weights.push_back(mass * eig.vector(0, k) * eig.vector(0, k));
  }
  return rule;
}

template <typename T>
std::vector<T> orthogonal_polynomial(const std::vector<T>& s, int n) {
  if (static_cast<int>(s.size()) < 2 * n) throw Error(ErrorCode::TooFewMoments, "not enough moments");
  std::vector<T> h, rhs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) h.push_back(s[i + j]);
    rhs.push_back(T(-s[i + n]));
  }
  std::vector<T> coeffs = n > 0 ? solve_linear(h, rhs) : std::vector<T>{};
  coeffs.push_back(T(1));
  return coeffs;
}

template <typename T>
Recovery recover(const std::vector<T>& moments, double tol) {
  if (moments.size() < 2) throw Error(ErrorCode::TooFewMoments, "need moments up to order one");
  const bool unit_mass = is_exact_v<T> ? moments[0] == 1 : std::fabs(to_double(moments[0]) - 1.0) <= tol;
  if (!unit_mass) throw Error(ErrorCode::NotRepresentable, "zeroth moment must equal one");
  Recovery out;
  out.exact = is_exact_v<T>;
  const int d = static_cast<int>(moments.size()) - 1;

  if (d == 1) {
    const T& mean = moments[1];
    if (mean < 0 || mean > 1) throw Error(ErrorCode::NotRepresentable, "mean outside [0, 1]");
    out.branch = RecoveryBranch::LowOrder;
    out.measure = AtomicMeasure({Atom{Number(mean), Number(1)}});
    if constexpr (is_exact_v<T>) out.endpoint_atom = sgn(mean) == 0 || mean == 1;
    finish(out, moments, tol);
    return out;
  }

  const HankelPair<T> pair = build_hankel(moments, T(0));
  const PsdVerdict va = psd_check(pair.a, tol);
  const PsdVerdict vb = psd_check(pair.b, tol);
  if (va.status == PsdStatus::Indefinite || vb.status == PsdStatus::Indefinite) {
    throw Error(ErrorCode::NotRepresentable, "moment matrices are not positive semidefinite");
  }

  if (va.status == PsdStatus::PositiveDefinite && vb.status == PsdStatus::PositiveDefinite) {
    out.branch = RecoveryBranch::Interior;
    std::vector<T> s = moments;
    if (d % 2 == 0) s.push_back(midpoint_extension(moments));
    const int count = static_cast<int>(s.size()) / 2;
    std::vector<Candidate> atoms = interior_atoms(s, count, Localizer::None);
    out.measure = assemble(std::move(atoms), tol);
    out.endpoint_atom = false;
    finish(out, moments, tol);
    return out;
  }

  out.branch = RecoveryBranch::Determinate;
  Localizer loc;
  if (d % 2 == 0) {
    loc = va.status == PsdStatus::PositiveSemidefiniteSingular ? Localizer::None : Localizer::Both;
  } else {
    loc = va.status == PsdStatus::PositiveSemidefiniteSingular ? Localizer::Lower : Localizer::Upper;
  }
  const std::vector<T> s = localized(moments, loc);
  const SymMatrix<T>& singular = va.status == PsdStatus::PositiveSemidefiniteSingular ? pair.a : pair.b;
  const int rank = singular.dim() == 0 ? 0 : matrix_rank(singular);
  out.rank = rank;

  std::vector<Candidate> atoms = interior_atoms(s, rank, loc);

  if constexpr (is_exact_v<T>) {
    const std::vector<Rational> q = orthogonal_polynomial(s, rank);
    const Rational q0 = poly_eval(q, Rational(0));
    const Rational q1 = poly_eval(q, Rational(1));
    std::vector<Rational> tq(q.size() + 1, Rational(0));
    for (std::size_t k = 0; k < q.size(); ++k) tq[k + 1] = q[k];
    Rational w0 = 0, w1 = 0;
    switch (loc) {
      case Localizer::None:
        out.endpoint_atom = sgn(q0) == 0 || sgn(q1) == 0;
        break;
      case Localizer::Lower:
        w0 = functional(moments, q) / q0;
        out.endpoint_atom = sgn(w0) != 0 || sgn(q1) == 0;
        break;
      case Localizer::Upper:
        w1 = functional(moments, q) / q1;
        out.endpoint_atom = sgn(w1) != 0 || sgn(q0) == 0;
        break;
      case Localizer::Both:
        w1 = functional(moments, tq) / q1;
        w0 = (functional(moments, q) - functional(moments, tq)) / q0;
        out.endpoint_atom = sgn(w0) != 0 || sgn(w1) != 0;
        break;
    }
    if (sgn(w0) != 0) atoms.push_back({Number(Rational(0)), Number(w0)});
    if (sgn(w1) != 0) atoms.push_back({Number(Rational(1)), Number(w1)});
  } else {
    double mass = 0, first = 0;
    for (const auto& a : atoms) {
      mass += a.weight.value();
      first += a.weight.value() * a.location.value();
    }
    switch (loc) {
      case Localizer::None:
        break;
      case Localizer::Lower:
        atoms.push_back({Number(0.0), Number(moments[0] - mass)});
        break;
      case Localizer::Upper:
        atoms.push_back({Number(1.0), Number(moments[0] - mass)});
        break;
      case Localizer::Both: {
        const double w1 = moments[1] - first;
        atoms.push_back({Number(1.0), Number(w1)});
        atoms.push_back({Number(0.0), Number(moments[0] - mass - w1)});
        break;
      }
    }
  }
  out.measure = assemble(std::move(atoms), tol);
  finish(out, moments, tol);
  return out;
}

template GaussRule gauss_from_moments(const std::vector<double>&, int);
template GaussRule gauss_from_moments(const std::vector<Rational>&, int);
template std::vector<double> orthogonal_polynomial(const std::vector<double>&, int);
template std::vector<Rational> orthogonal_polynomial(const std::vector<Rational>&, int);
template Recovery recover(const std::vector<double>&, double);
template Recovery recover(const std::vector<Rational>&, double);

}  // namespace eos
