#include "eos/hankel.hpp"

#include <algorithm>
#include <cmath>

namespace eos {

template <typename T>
HankelPair<T> build_hankel(const std::vector<T>& s, const T& epsilon) {
  if (s.size() < 3) {
    throw Error(ErrorCode::TooFewMoments, "need at least three moments, got " + std::to_string(s.size()));
  }
  if (epsilon < 0 || !(epsilon < T(1) / T(2))) {
    throw Error(ErrorCode::EpsilonOutOfRange, "epsilon must lie in [0, 1/2)");
  }
  const int d = static_cast<int>(s.size()) - 1;
  HankelPair<T> out;
  out.epsilon = epsilon;
  if (d % 2 == 0) {
    const int m = d / 2;
    out.parity = Parity::Even;
    out.m = m;
    const T shrink = epsilon * (T(1) - epsilon);
    out.a = SymMatrix<T>(m + 1);
    for (int i = 0; i <= m; ++i)
      for (int j = i; j <= m; ++j) out.a.set(i, j, s[i + j]);
    out.b = SymMatrix<T>(m);
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) out.b.set(i, j, T(s[i + j + 1] - s[i + j + 2] - shrink * s[i + j]));
  } else {
    const int m = (d - 1) / 2;
    out.parity = Parity::Odd;
    out.m = m;
    out.a = SymMatrix<T>(m + 1);
    out.b = SymMatrix<T>(m + 1);
    for (int i = 0; i <= m; ++i) {
      for (int j = i; j <= m; ++j) {
        out.a.set(i, j, T(s[i + j + 1] - epsilon * s[i + j]));
        out.b.set(i, j, T((T(1) - epsilon) * s[i + j] - s[i + j + 1]));
      }
    }
  }
  return out;
}

template HankelPair<double> build_hankel(const std::vector<double>&, const double&);
template HankelPair<Rational> build_hankel(const std::vector<Rational>&, const Rational&);

const char* to_string(PsdStatus s) {
  switch (s) {
    case PsdStatus::PositiveDefinite: return "PositiveDefinite";
    case PsdStatus::PositiveSemidefiniteSingular: return "PositiveSemidefiniteSingular";
    case PsdStatus::Indefinite: return "Indefinite";
  }
  return "Unknown";
}

namespace {

void fill_spectrum(const SymMatrix<double>& m, PsdVerdict& v) {
  if (m.dim() == 0) {
    v.min_eigenvalue = 0;
    v.scale = 0;
    return;
  }
  const SymEigen eig = jacobi_eigen(m);
  v.min_eigenvalue = eig.values.front();
  v.scale = std::max(std::fabs(eig.values.front()), std::fabs(eig.values.back()));
}

}  // namespace

PsdVerdict psd_check(const SymMatrix<double>& m, double tol) {
  PsdVerdict v;
  if (m.dim() == 0) {
    v.status = PsdStatus::PositiveDefinite;
    return v;
  }
  for (double x : m.data()) {
    if (!std::isfinite(x)) throw Error(ErrorCode::InvalidSequence, "non-finite matrix entry");
  }
  const SymEigen eig = jacobi_eigen(m);
  v.min_eigenvalue = eig.values.front();
  v.scale = std::max(std::fabs(eig.values.front()), std::fabs(eig.values.back()));
  const double threshold = tol * std::max(1.0, std::fabs(eig.values.back()));
  for (double lambda : eig.values) {
    if (lambda > threshold) ++v.rank;
  }
  if (v.min_eigenvalue > threshold) {
    v.status = PsdStatus::PositiveDefinite;
  } else if (v.min_eigenvalue < -threshold) {
    v.status = PsdStatus::Indefinite;
  } else {
    v.status = PsdStatus::PositiveSemidefiniteSingular;
  }
  return v;
}

Rational determinant(const SymMatrix<Rational>& m) {
  const int n = m.dim();
  if (n == 0) return Rational(1);
  std::vector<Rational> a = m.data();
  Rational prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a[k * n + k]) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i) {
        if (sgn(a[i * n + k]) != 0) {
          swap = i;
          break;
        }
      }
      if (swap < 0) return Rational(0);
      for (int j = 0; j < n; ++j) std::swap(a[k * n + j], a[swap * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
      }
    }
    prev = a[k * n + k];
  }
  Rational det = a[(n - 1) * n + (n - 1)];
  return sign > 0 ? det : Rational(-det);
}

PsdStatus sylvester_classify(const SymMatrix<Rational>& m) {
  const int n = m.dim();
  bool leading_positive = true;
  for (int k = 1; k <= n; ++k) {
    if (sgn(determinant(m.leading(k))) <= 0) {
      leading_positive = false;
      break;
    }
  }
  if (leading_positive) return PsdStatus::PositiveDefinite;
  // Semidefiniteness needs every principal minor, not only the leading ones.
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    SymMatrix<Rational> sub(static_cast<int>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = i; j < idx.size(); ++j) sub.set(static_cast<int>(i), static_cast<int>(j), m(idx[i], idx[j]));
    if (sgn(determinant(sub)) < 0) return PsdStatus::Indefinite;
  }
  return PsdStatus::PositiveSemidefiniteSingular;
}

ExactInertia ldl_classify(const SymMatrix<Rational>& m) {
  const int n = m.dim();
  std::vector<Rational> a = m.data();
  std::vector<bool> active(n, true);
  ExactInertia out;
  for (int step = 0; step < n; ++step) {
    int pivot = -1;
    for (int i = 0; i < n; ++i) {
      if (!active[i]) continue;
      const int s = sgn(a[i * n + i]);
      if (s < 0) {
        out.status = PsdStatus::Indefinite;
        return out;
      }
      if (s > 0 && pivot < 0) pivot = i;
    }
    if (pivot < 0) {
      // Zero diagonal on the remaining block: semidefinite only if the
      // whole block vanishes, otherwise a 2x2 principal minor is negative.
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (active[i] && active[j] && sgn(a[i * n + j]) != 0) {
            out.status = PsdStatus::Indefinite;
            return out;
          }
      break;
    }
    active[pivot] = false;
    ++out.rank;
    const Rational d = a[pivot * n + pivot];
    for (int i = 0; i < n; ++i) {
      if (!active[i] || sgn(a[i * n + pivot]) == 0) continue;
      const Rational factor = a[i * n + pivot] / d;
      for (int j = 0; j < n; ++j) {
        if (!active[j]) continue;
        a[i * n + j] -= factor * a[pivot * n + j];
      }
    }
  }
  out.status = out.rank == n ? PsdStatus::PositiveDefinite : PsdStatus::PositiveSemidefiniteSingular;
  return out;
}

PsdVerdict psd_check(const SymMatrix<Rational>& m, double /*tol*/) {
  PsdVerdict v;
  v.exact = true;
  if (m.dim() == 0) {
    v.status = PsdStatus::PositiveDefinite;
    return v;
  }
  const ExactInertia inertia = ldl_classify(m);
  v.rank = inertia.rank;
  v.status = m.dim() <= 3 ? sylvester_classify(m) : inertia.status;
  fill_spectrum(to_double(m), v);
  return v;
}

}  // namespace eos
