#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include "alpharm/errors.hpp"

namespace alpharm {

/// Tolerances for all circle integrals.
struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 24;  // panel bisection cap
};

namespace detail {

inline double mag(double v) { return std::abs(v); }
inline double mag(const std::complex<double>& v) { return std::abs(v); }

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

// Romberg table on a single panel. Returns the extrapolated value and an
// error estimate from the last diagonal difference. Endpoint samples are
// nudged inward by a relative 1e-13 so panels cut at jump knots see their
// one-sided values.
template <class T, class F>
std::pair<T, double> romberg_panel(F& f, double a, double b, int max_level,
                                   double abs_tol, double rel_tol) {
  constexpr int kMax = 12;
  std::array<T, kMax> prev{}, cur{};
  const double w = b - a;
  const double nudge = 1e-13 * w;
  prev[0] = T(0.5) * w * (f(a + nudge) + f(b - nudge));
  double err = mag(prev[0]);
  int n = 1;
  for (int k = 1; k <= max_level; ++k) {
    T s{};
    const double h = w / (2 * n);
    for (int j = 0; j < n; ++j) s += f(a + h * (2 * j + 1));
    cur[0] = T(0.5) * prev[0] + s * h;
    double p4 = 4.0;
    for (int j = 1; j <= k && j < kMax; ++j) {
      cur[j] = cur[j - 1] + (cur[j - 1] - prev[j - 1]) / (p4 - 1.0);
      p4 *= 4.0;
    }
    const int d = std::min(k, kMax - 1);
    err = mag(cur[d] - prev[std::min(k - 1, kMax - 1)]);
    if (k >= 3 && err <= std::max(abs_tol, rel_tol * mag(cur[d])))
      return {cur[d], err};
    prev = cur;
    n *= 2;
  }
  const int d = std::min(max_level, kMax - 1);
  return {prev[d], err};
}

}  // namespace detail

/// Uniform trapezoid rule with doubling over one full period of a
/// 2pi-periodic integrand (spectrally accurate for smooth integrands).
/// Kinked or sharply peaked integrands belong in integrate() with knots.
template <class F>
auto integrate_periodic(F&& f, const QuadratureConfig& cfg)
    -> std::invoke_result_t<F&, double> {
  using T = std::invoke_result_t<F&, double>;
  const double period = detail::kTwoPi;
  int n = 32;
  T sum{};
  for (int j = 0; j < n; ++j) sum += f(period * j / n);
  T prev = sum * (period / n);
  int consecutive = 0;
  for (int pass = 0; pass < 15; ++pass) {
    for (int j = 0; j < n; ++j) sum += f(period * (j + 0.5) / n);
    n *= 2;
    T cur = sum * (period / n);
    const double err = detail::mag(cur - prev);
    if (err <= std::max(cfg.abs_tol, cfg.rel_tol * detail::mag(cur))) {
      if (++consecutive >= 2) return cur;
    } else {
      consecutive = 0;
    }
    prev = cur;
  }
  throw QuadratureError("integrate_periodic: not converged after " +
                        std::to_string(n) + " nodes");
}

/// Adaptive Romberg over [a,b], splitting first at the supplied interior
/// knots (kink locations, peak shells), then bisecting panels that miss
/// their share of the tolerance budget, down to cfg.max_depth.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureConfig& cfg,
               std::vector<double> knots = {})
    -> std::invoke_result_t<F&, double> {
  using T = std::invoke_result_t<F&, double>;
  const double total = b - a;

  std::vector<double> cuts;
  cuts.push_back(a);
  std::sort(knots.begin(), knots.end());
  for (double k : knots)
    if (k > a + 1e-14 * std::abs(total) && k < b - 1e-14 * std::abs(total) &&
        k > cuts.back() + 1e-13)
      cuts.push_back(k);
  cuts.push_back(b);

  // coarse pass for a global magnitude scale
  double scale = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto est = detail::romberg_panel<T>(f, cuts[i], cuts[i + 1], 3, 0.0, 1e-3);
    scale += detail::mag(est.first);
  }
  if (!std::isfinite(scale)) scale = 0.0;  // singular panels must earn abs_tol
  const double budget = std::max(cfg.abs_tol, cfg.rel_tol * scale);

  struct Panel {
    double a, b;
    int depth;
  };
  std::vector<Panel> stack;
  for (std::size_t i = cuts.size() - 1; i-- > 0;)
    stack.push_back({cuts[i], cuts[i + 1], 0});

  T result{};
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double w = p.b - p.a;
    const double tol_here = budget * (w / std::abs(total));
    auto [val, err] = detail::romberg_panel<T>(f, p.a, p.b, 7, tol_here,
                                               cfg.rel_tol);
    if (std::isfinite(detail::mag(val)) &&
        err <= std::max(tol_here, cfg.rel_tol * detail::mag(val))) {
      result += val;
    } else if (p.depth >= cfg.max_depth) {
      throw QuadratureError("integrate: panel [" + std::to_string(p.a) + ", " +
                            std::to_string(p.b) + "] not converged at depth " +
                            std::to_string(p.depth) + " (err " +
                            std::to_string(err) + ")");
    } else {
      const double mid = 0.5 * (p.a + p.b);
      stack.push_back({mid, p.b, p.depth + 1});
      stack.push_back({p.a, mid, p.depth + 1});
    }
  }
  return result;
}

}  // namespace alpharm
