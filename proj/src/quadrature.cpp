#include "eos/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <string>

#include "eos/error.hpp"

namespace eos {

double sigmoid(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

double logit(double u) { return std::log(u) - std::log1p(-u); }

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;
using Gauss = boost::math::quadrature::gauss<double, 30>;

constexpr int kMaxPanels = 4000;

struct Panel {
  double a, b, value, error, l1;
  unsigned depth;
  bool operator<(const Panel& o) const { return error < o.error; }
};

// Globally adaptive: always split the panel with the largest error estimate,
// stop once the summed estimate fits the budget. The budget is relative to
// the L1 norm so integrals that cancel to zero still terminate.
double adaptive(const std::function<double(double)>& g, double a, double b, const QuadratureSettings& qs,
                double abs_floor) {
  bool bad = false;
  auto guarded = [&](double x) {
    const double y = g(x);
    if (!std::isfinite(y)) {
      bad = true;
      return 0.0;
    }
    return y;
  };
  // 61-point Kronrod rule with the embedded 30-point Gauss rule; the odd
  // Kronrod abscissae are the Gauss nodes.
  auto panel = [&](double lo, double hi, unsigned depth) {
    const auto& x = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double fc = guarded(mid);
    double kron = fc * wk[0];
    double gauss = 0;
    double l1 = std::fabs(fc) * wk[0];
    for (std::size_t i = 1; i < x.size(); ++i) {
      const double fp = guarded(mid + half * x[i]);
      const double fm = guarded(mid - half * x[i]);
      kron += (fp + fm) * wk[i];
      l1 += (std::fabs(fp) + std::fabs(fm)) * wk[i];
      if (i % 2 == 1) gauss += (fp + fm) * wg[i / 2];
    }
    const double v = kron * half;
    const double err = std::max(std::fabs((kron - gauss) * half), 4e-16 * std::fabs(v));
    return Panel{lo, hi, v, err, l1 * half, depth};
  };
  std::priority_queue<Panel> heap;
  heap.push(panel(a, b, 0));
  double value = heap.top().value;
  double error = heap.top().error;
  double l1 = heap.top().l1;
  int panels = 1;
  while (error > qs.rel_tol * l1 + abs_floor) {
    if (bad) break;
    Panel p = heap.top();
    if (p.depth >= qs.max_depth || panels >= kMaxPanels) break;
    heap.pop();
    const double mid = 0.5 * (p.a + p.b);
    Panel left = panel(p.a, mid, p.depth + 1);
    Panel right = panel(mid, p.b, p.depth + 1);
    value += left.value + right.value - p.value;
    error += left.error + right.error - p.error;
    l1 += left.l1 + right.l1 - p.l1;
    heap.push(left);
    heap.push(right);
    panels += 1;
  }
  if (bad || !std::isfinite(value)) {
    throw Error(ErrorCode::IntegrationFailure, "integrand is not finite on the interval");
  }
  if (error > qs.rel_tol * l1 + abs_floor) {
    throw Error(ErrorCode::IntegrationFailure,
                "quadrature error estimate " + std::to_string(error) + " exceeds tolerance");
  }
  return value;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSettings& settings,
                 double abs_floor) {
  if (a == b) return 0.0;
  if (a > b) return -integrate(f, b, a, settings, abs_floor);
  const bool left_inf = std::isinf(a);
  const bool right_inf = std::isinf(b);
  if (left_inf && right_inf) {
    return integrate(f, a, 0.0, settings, abs_floor) + integrate(f, 0.0, b, settings, abs_floor);
  }
  if (right_inf) {
    // s = a + x / (1 - x)
    auto g = [&](double x) {
      const double w = 1.0 / (1.0 - x);
      const double y = f(a + x * w);
      return y == 0 ? 0.0 : y * w * w;
    };
    return adaptive(g, 0.0, 1.0, settings, abs_floor);
  }
  if (left_inf) {
    auto g = [&](double x) {
      const double w = 1.0 / (1.0 - x);
      const double y = f(b - x * w);
      return y == 0 ? 0.0 : y * w * w;
    };
    return adaptive(g, 0.0, 1.0, settings, abs_floor);
  }
  return adaptive(f, a, b, settings, abs_floor);
}

}  // namespace eos
