#include "eos/feasibility.hpp"

#include <cmath>

namespace eos {

const char* to_string(FeasibilityStatus s) {
  return s == FeasibilityStatus::Feasible ? "Feasible" : "Infeasible";
}

const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::LowOrder: return "LowOrder";
    case VerdictReason::StrictDefinite: return "StrictDefinite";
    case VerdictReason::OpenSupportDeterminate: return "OpenSupportDeterminate";
    case VerdictReason::NecessaryPsdFailed: return "NecessaryPsdFailed";
    case VerdictReason::BoundaryAtomAtEndpoint: return "BoundaryAtomAtEndpoint";
    case VerdictReason::ClosedFormN4: return "ClosedFormN4";
    case VerdictReason::ClosedFormN5: return "ClosedFormN5";
  }
  return "Unknown";
}

namespace {

Number half(const Number& x) {
  if (x.exact()) return Number(Rational(x.rational() / 2));
  return Number(x.value() / 2);
}

void attach_certificate(FeasibilityVerdict& v, AtomicMeasure measure) {
  const Number gap = support_gap(measure);
  if (!(gap.value() > 0)) {
    throw Error(ErrorCode::RecoveryFailed, "certificate touches the boundary of (0, 1)");
  }
  v.boundary_distance = gap.value();
  v.epsilon_witness = half(gap);
  v.certificate = std::move(measure);
}

template <typename T>
Recovery recover_or_fail(const std::vector<T>& moments, double tol) {
  try {
    return recover(moments, tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotRepresentable) {
      throw Error(ErrorCode::RecoveryFailed, e.what());
    }
    throw;
  }
}

template <typename T>
FeasibilityVerdict low_order_verdict(const NuVector<T>& nu, double tol) {
  FeasibilityVerdict v;
  v.exact = is_exact_v<T>;
  v.status = FeasibilityStatus::Feasible;
  v.reason = VerdictReason::LowOrder;
  if (nu.nu.size() == 1) {
    attach_certificate(v, AtomicMeasure({Atom{Number(Rational(1, 2)), Number(1)}}));
  } else {
    attach_certificate(v, recover_or_fail(nu.nu, tol).measure);
  }
  return v;
}

template <typename T>
FeasibilityVerdict closed_form_verdict(const BetaSequence<T>& beta, bool feasible, VerdictReason reason) {
  FeasibilityVerdict v;
  v.exact = is_exact_v<T>;
  v.reason = reason;
  v.status = feasible ? FeasibilityStatus::Feasible : FeasibilityStatus::Infeasible;
  if (feasible) {
    const NuVector<T> nu = nu_from_beta(beta);
    attach_certificate(v, recover_or_fail(nu.nu, kDefaultTol).measure);
  }
  return v;
}

template <typename T>
int sign_of(const T& x) {
  if constexpr (is_exact_v<T>) {
    return sgn(x);
  } else {
    return (x > 0) - (x < 0);
  }
}

}  // namespace

template <typename T>
FeasibilityVerdict decide_open_moment_problem(const std::vector<T>& moments, double tol) {
  FeasibilityVerdict v;
  v.exact = is_exact_v<T>;
  const HankelPair<T> pair = build_hankel(moments, T(0));
  const PsdVerdict va = psd_check(pair.a, tol);
  const PsdVerdict vb = psd_check(pair.b, tol);
  if (va.status == PsdStatus::Indefinite || vb.status == PsdStatus::Indefinite) {
    v.status = FeasibilityStatus::Infeasible;
    v.reason = VerdictReason::NecessaryPsdFailed;
    return v;
  }
  Recovery rec = recover_or_fail(moments, tol);
  if (rec.branch == RecoveryBranch::Interior) {
    v.status = FeasibilityStatus::Feasible;
    v.reason = VerdictReason::StrictDefinite;
    attach_certificate(v, std::move(rec.measure));
    return v;
  }
  v.boundary_distance = rec.boundary_distance;
  if (rec.endpoint_atom) {
    v.status = FeasibilityStatus::Infeasible;
    v.reason = VerdictReason::BoundaryAtomAtEndpoint;
    v.endpoint_measure = std::move(rec.measure);
    return v;
  }
  v.status = FeasibilityStatus::Feasible;
  v.reason = VerdictReason::OpenSupportDeterminate;
  attach_certificate(v, std::move(rec.measure));
  return v;
}

template <typename T>
FeasibilityVerdict check_eos(const BetaSequence<T>& beta, double tol) {
  const NuVector<T> nu = nu_from_beta(beta);
  if (beta.n() <= 3) return low_order_verdict(nu, tol);
  return decide_open_moment_problem(nu.nu, tol);
}

template <typename T>
FeasibilityVerdict check_ns_n4(const BetaSequence<T>& beta) {
  if (beta.n() != 4) throw Error(ErrorCode::WrongLength, "closed form applies to n = 4 only");
  const T d1 = beta[1] - beta[0];
  const T d2 = beta[2] - beta[1];
  const T d3 = beta[3] - beta[2];
  // 9 d1 d3 >= 4 d2^2 avoids dividing by 9.
  const bool feasible = T(9) * d1 * d3 >= T(4) * d2 * d2;
  return closed_form_verdict(beta, feasible, VerdictReason::ClosedFormN4);
}

template <typename T>
FeasibilityVerdict check_n5(const BetaSequence<T>& beta) {
  if (beta.n() != 5) throw Error(ErrorCode::WrongLength, "closed form applies to n = 5 only");
  const T d1 = beta[1] - beta[0];
  const T d2 = beta[2] - beta[1];
  const T d3 = beta[3] - beta[2];
  const T d4 = beta[4] - beta[3];
  const T left = T(2) * d1 * d3 - d2 * d2;
  const T right = T(2) * d2 * d4 - d3 * d3;
  const int l = sign_of(left);
  const int r = sign_of(right);
  const bool feasible = (l > 0 && r > 0) || (l == 0 && r == 0);
  return closed_form_verdict(beta, feasible, VerdictReason::ClosedFormN5);
}

template <typename T>
FeasibilityVerdict check_mixture(const ProbabilityVector<T>& p, double tol) {
  const std::vector<T> u = u_from_p(p);
  return check_moment_hull(u, tol);
}

template <typename T>
FeasibilityVerdict check_moment_hull(const std::vector<T>& u, double tol) {
  if (u.size() < 2) throw Error(ErrorCode::TooFewMoments, "need u_0 and u_1 at least");
  const bool unit = is_exact_v<T> ? u[0] == 1 : std::fabs(to_double(u[0]) - 1.0) <= tol;
  if (!unit) throw Error(ErrorCode::InvalidSequence, "u_0 must equal 1");
  if (u.size() == 2) {
    FeasibilityVerdict v;
    v.exact = is_exact_v<T>;
    v.reason = VerdictReason::LowOrder;
    if (u[1] > 0 && u[1] < 1) {
      v.status = FeasibilityStatus::Feasible;
      attach_certificate(v, AtomicMeasure({Atom{Number(u[1]), Number(1)}}));
    } else {
      v.status = FeasibilityStatus::Infeasible;
    }
    return v;
  }
  return decide_open_moment_problem(u, tol);
}

#define EOS_INSTANTIATE(T)                                                                  \
  template FeasibilityVerdict decide_open_moment_problem(const std::vector<T>&, double);    \
  template FeasibilityVerdict check_eos(const BetaSequence<T>&, double);                    \
  template FeasibilityVerdict check_ns_n4(const BetaSequence<T>&);                          \
  template FeasibilityVerdict check_n5(const BetaSequence<T>&);                             \
  template FeasibilityVerdict check_mixture(const ProbabilityVector<T>&, double);           \
  template FeasibilityVerdict check_moment_hull(const std::vector<T>&, double);

EOS_INSTANTIATE(double)
EOS_INSTANTIATE(Rational)

#undef EOS_INSTANTIATE

}  // namespace eos
