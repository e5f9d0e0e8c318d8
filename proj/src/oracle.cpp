#include "alpharm/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "alpharm/bounds.hpp"
#include "alpharm/errors.hpp"
#include "alpharm/kernel.hpp"

namespace alpharm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

// distance from y to target modulo a period
double mod_dist(double y, double target, double period) {
  double d = std::fmod(std::abs(y - target), period);
  return std::min(d, period - d);
}

// 1 + r^2 + 2 r cos(b), written as (1-r)^2 + 4 r cos^2(b/2): stays exact
// (and nonnegative) through the zero at b = pi, r = 1
double plus_form(double r, double b) {
  const double cs = std::cos(0.5 * b);
  return (1.0 - r) * (1.0 - r) + 4.0 * r * cs * cs;
}
}  // namespace

GridSpec::GridSpec(double lo_, double hi_, int n_) : lo(lo_), hi(hi_), n(n_) {
  if (!(lo < hi)) throw DomainError("GridSpec: lo < hi required");
  if (n < 2) throw DomainError("GridSpec: n >= 2 required");
}

nlohmann::ordered_json to_json(const ScanReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  nlohmann::ordered_json grids = nlohmann::ordered_json::object();
  for (const auto& [label, g] : report.grids)
    grids[label] = {{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}};
  j["grids"] = grids;
  j["argmax"] = report.argmax;
  j["max_value"] = report.max_value;
  j["claim_holds"] = report.claim_holds;
  j["tolerance"] = report.tolerance;
  if (!report.details.empty()) {
    j["detail_columns"] = report.detail_columns;
    j["details"] = report.details;
  }
  if (!report.extras.empty()) j["extras"] = report.extras;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

double integral_power_cos(double m, double r, const QuadratureConfig& quad) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("integral_power_cos: r in [0,1]");
  if (r == 1.0 && !(m > -0.5))
    throw DomainError("integral_power_cos: r=1 requires m > -1/2");
  auto f = [&](double s) { return std::pow(plus_form(r, s), m); };
  if (r < 1.0) return integrate_periodic(f, quad);
  return integrate(f, 0.0, kTwoPi, quad, {kPi});
}

double q_norm_kernel(const Params& params, double r, const QuadratureConfig& quad) {
  if (!params.q_finite())
    throw DomainError("q_norm_kernel: p must exceed 1 (finite q)");
  const DiskPoint z(r, 0.0);
  const double q = params.q;
  auto f = [&](double t) { return std::pow(kernel_value(params.alpha, z, t), q); };
  const auto knots = kernel_peak_knots(z.r, z.s);
  const double mean =
      (knots.empty() ? integrate_periodic(f, quad)
                     : integrate(f, z.s - kPi, z.s + kPi, quad, knots)) /
      kTwoPi;
  return std::pow(mean, 1.0 / q);
}

namespace {

double marte_h(double q, double r, double m, double y, const QuadratureConfig& quad) {
  auto f = [&](double x) {
    return std::pow(std::abs(std::cos(x)), q) * std::pow(plus_form(r, x - y), m);
  };
  std::vector<double> knots = {0.5 * kPi, 1.5 * kPi};
  if (r == 1.0) knots.push_back(reduce_angle(y + kPi));
  return integrate(f, 0.0, kTwoPi, quad, std::move(knots));
}

}  // namespace

ScanReport lemma_marte_scan(double q, double r, double m, const GridSpec& y_grid,
                            const QuadratureConfig& quad, ExecMode mode) {
  if (!(q >= 0.0)) throw DomainError("lemma_marte_scan: q >= 0 required");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("lemma_marte_scan: r in [0,1]");
  if (r == 1.0 && !(m > -0.5))
    throw DomainError("lemma_marte_scan: r=1 requires m > -1/2");

  std::vector<double> h(y_grid.n);
  parallel_for(y_grid.n, mode,
               [&](int i) { h[i] = marte_h(q, r, m, y_grid.point(i), quad); });

  int imax = 0, imin = 0;
  for (int i = 1; i < y_grid.n; ++i) {
    if (h[i] > h[imax]) imax = i;
    if (h[i] < h[imin]) imin = i;
  }
  const double ystar = y_grid.point(imax);
  const double flat_tol = 1e-8 * std::max(std::abs(h[imax]), 1.0);
  const bool flat = (h[imax] - h[imin]) <= flat_tol;

  ScanReport rep;
  rep.name = "lemma_marte";
  rep.grids = {{"y", y_grid}};
  rep.argmax = {ystar};
  rep.max_value = h[imax];
  rep.tolerance = y_grid.step() + 1e-12;
  if (flat) {
    rep.claim_holds = true;
    rep.note = "flat maximum (H constant on the grid)";
  } else if (m <= 1.0) {
    rep.claim_holds = mod_dist(ystar, 0.5 * kPi, kPi) <= rep.tolerance;
  } else {
    rep.claim_holds = mod_dist(ystar, 0.0, kPi) <= rep.tolerance;
  }
  rep.extras = {{"q", q}, {"r", r}, {"m", m}, {"h_min", h[imin]}, {"flat", flat ? 1.0 : 0.0}};
  return rep;
}

namespace {

double bele_b(double k, double m, double r, double x, const QuadratureConfig& quad) {
  auto f = [&](double b) {
    return std::pow(std::abs(std::cos(b - x)), k) * std::pow(plus_form(r, b), m);
  };
  // integrand kinks where cos(b-x) = 0; weight vanishes at b = +-pi for r = 1
  std::vector<double> knots;
  double c1 = x + 0.5 * kPi, c2 = x - 0.5 * kPi;
  for (double c : {c1, c2, c1 - kTwoPi, c2 + kTwoPi})
    if (c > -kPi && c < kPi) knots.push_back(c);
  return integrate(f, -kPi, kPi, quad, std::move(knots));
}

}  // namespace

ScanReport lemma_bele_scan(double k, double m, const GridSpec& r_grid,
                           const GridSpec& x_grid, const QuadratureConfig& quad,
                           ExecMode mode) {
  if (!(k >= 0.0)) throw DomainError("lemma_bele_scan: k >= 0 required");
  if (!(m > -0.5))
    throw DomainError("lemma_bele_scan: m > -1/2 required for the r=1 endpoint");
  if (!(r_grid.lo >= 0.0 && r_grid.hi <= 1.0))
    throw DomainError("lemma_bele_scan: r grid must lie in [0,1]");

  const int total = r_grid.n * x_grid.n;
  std::vector<double> vals(total);
  parallel_for(total, mode, [&](int idx) {
    const int ir = idx / x_grid.n, ix = idx % x_grid.n;
    vals[idx] = bele_b(k, m, r_grid.point(ir), x_grid.point(ix), quad);
  });

  int imax = 0;
  for (int i = 1; i < total; ++i)
    if (vals[i] > vals[imax]) imax = i;
  const double rstar = r_grid.point(imax / x_grid.n);
  const double xstar_grid = x_grid.point(imax % x_grid.n);

  const double xstar = (m > 1.0) ? 0.0 : 0.5 * kPi;
  const double reference = bele_b(k, m, 1.0, xstar, quad);
  const double tol = 1e-8 * std::max(std::abs(reference), 1.0);

  ScanReport rep;
  rep.name = "lemma_bele";
  rep.grids = {{"r", r_grid}, {"x", x_grid}};
  rep.argmax = {rstar, xstar_grid};
  rep.max_value = vals[imax];
  rep.tolerance = tol;
  rep.claim_holds = vals[imax] <= reference + tol;
  rep.extras = {{"k", k}, {"m", m}, {"reference", reference}, {"x_star", xstar}};
  return rep;
}

double phi(double alpha, double r, double t, const QuadratureConfig& quad) {
  if (!(alpha > -1.0)) throw DomainError("phi: alpha must be > -1");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("phi: r in (0,1) required");
  const double a2 = 2.0 + alpha;
  auto f = [&](double b) {
    return std::abs(a2 * std::cos(b + t) - alpha * r * std::cos(t)) *
           std::pow(plus_form(r, b), alpha / 2.0) / (1.0 - r * r);
  };
  // split at the analytic roots of the absolute value
  const double u = alpha * r * std::cos(t) / a2;
  std::vector<double> knots;
  if (std::abs(u) <= 1.0) {
    const double w = std::acos(u);
    for (double b : {-t - w, -t + w}) {
      double bb = std::fmod(b + 3.0 * kPi, kTwoPi) - kPi;  // into (-pi, pi]
      knots.push_back(bb);
    }
  }
  return integrate(f, -kPi, kPi, quad, std::move(knots));
}

double phi_prime_closed(double alpha, double r, double t) {
  if (!(r > 0.0 && r < 1.0))
    throw DomainError("phi_prime_closed: r in (0,1) required");
  const double ct = std::cos(t), st = std::sin(t);
  if (alpha == 2.0) {
    return 4.0 * r *
           (2.0 * (1.0 - r * r) * std::asin(0.5 * r * ct) +
            3.0 * r * ct * std::sqrt(4.0 - r * r * ct * ct)) *
           st / (1.0 - r * r);
  }
  if (alpha == 4.0) {
    return 16.0 * r / (27.0 * (1.0 - r * r)) *
           (27.0 * (2.0 - r * r - r * r * r * r) * std::asin(2.0 * r * ct / 3.0) * st +
            r * std::sqrt(9.0 - 4.0 * r * r * ct * ct) *
                (9.0 + 31.0 * r * r + 10.0 * r * r * std::cos(2.0 * t)) *
                std::sin(2.0 * t));
  }
  throw DomainError("phi_prime_closed: closed form known only for alpha in {2,4}");
}

double phi_bound_factor(const QuadratureConfig& quad) {
  double acc = 0.0;
  for (double r : {0.3, 0.5, 0.7})
    acc += grad_bound_conjecture(2.0, r) / phi(2.0, r, 0.5 * kPi, quad);
  return acc / 3.0;
}

ScanReport conjecture_scan(double alpha, const GridSpec& r_grid,
                           const GridSpec& t_grid, const QuadratureConfig& quad,
                           ExecMode mode) {
  if (!(alpha > 0.0)) throw DomainError("conjecture_scan: alpha > 0 required");
  if (!(r_grid.lo > 0.0 && r_grid.hi < 1.0))
    throw DomainError("conjecture_scan: r grid must lie in (0,1)");
  if (!(t_grid.lo >= 0.0 && t_grid.hi <= 0.5 * kPi + 1e-12))
    throw DomainError("conjecture_scan: t grid must lie in [0, pi/2]");

  const int total = r_grid.n * t_grid.n;
  std::vector<double> vals(total);
  parallel_for(total, mode, [&](int idx) {
    const int ir = idx / t_grid.n, it = idx % t_grid.n;
    vals[idx] = phi(alpha, r_grid.point(ir), t_grid.point(it), quad);
  });

  ScanReport rep;
  rep.name = "conjecture_phi";
  rep.grids = {{"r", r_grid}, {"t", t_grid}};
  rep.tolerance = t_grid.step() + 1e-12;
  rep.detail_columns = {"r", "argmax_t", "max_phi"};

  bool all_at_end = true;
  double global_max = -1.0;
  double gr = 0, gt = 0;
  for (int ir = 0; ir < r_grid.n; ++ir) {
    int best = 0;
    for (int it = 1; it < t_grid.n; ++it)
      if (vals[ir * t_grid.n + it] > vals[ir * t_grid.n + best]) best = it;
    const double tstar = t_grid.point(best);
    const double mx = vals[ir * t_grid.n + best];
    rep.details.push_back({r_grid.point(ir), tstar, mx});
    if (std::abs(tstar - 0.5 * kPi) > rep.tolerance) all_at_end = false;
    if (mx > global_max) {
      global_max = mx;
      gr = r_grid.point(ir);
      gt = tstar;
    }
  }
  rep.argmax = {gr, gt};
  rep.max_value = global_max;
  rep.claim_holds = all_at_end;
  rep.extras = {{"alpha", alpha}, {"phi_normalization", phi_bound_factor(quad)}};
  return rep;
}

double schwarz_oracle(double alpha, double r, const QuadratureConfig& quad) {
  if (!(alpha > -1.0)) throw DomainError("schwarz_oracle: alpha must be > -1");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("schwarz_oracle: r in [0,1) required");
  if (r == 0.0) return 0.0;
  const double w = std::pow(1.0 - r * r, alpha + 1.0);
  auto f = [&](double t) {
    // 1 + r^2 - 2 r sin t = (1-r)^2 + 4 r sin^2((pi/2 - t)/2)
    const double sn = std::sin(0.25 * kPi - 0.5 * t);
    const double d = (1.0 - r) * (1.0 - r) + 4.0 * r * sn * sn;
    return w * std::pow(d, -alpha / 2.0 - 1.0);
  };
  const double upper = integrate(f, 0.0, kPi, quad, {0.5 * kPi});
  const double lower = integrate(f, kPi, kTwoPi, quad, {1.5 * kPi});
  return c_alpha(alpha) / kTwoPi * (upper - lower);
}

ScanReport schwarz_monotone_check(double alpha, const BoundaryFunction& f,
                                  const GridSpec& z_grid,
                                  const QuadratureConfig& quad, ExecMode mode) {
  if (!(z_grid.lo >= 0.0 && z_grid.hi < 1.0))
    throw DomainError("schwarz_monotone_check: radial grid must lie in [0,1)");

  // hypothesis ||f*||_inf <= 1, checked on a fine angle grid
  double sup = 0.0;
  for (int i = 0; i < 1024; ++i)
    sup = std::max(sup, std::abs(f(kTwoPi * i / 1024)));
  if (sup > 1.0 + 1e-9)
    throw DomainError("schwarz_monotone_check: ||f*||_inf <= 1 violated (sup=" +
                      std::to_string(sup) + ")");

  // hypothesis f(0) = 0; rejected, never recentered
  const double at0 = std::abs(extend(alpha, f, DiskPoint(0.0, 0.0), quad));
  if (at0 > 1e-9)
    throw DomainError("schwarz_monotone_check: extension at 0 is " +
                      std::to_string(at0) + ", violating f(0)=0");

  constexpr int kAngles = 8;
  const int total = z_grid.n * kAngles;
  std::vector<double> excess(total);  // |f(z)| - bound(|z|)
  std::vector<double> magnitude(total);
  parallel_for(total, mode, [&](int idx) {
    const int ir = idx / kAngles, is = idx % kAngles;
    const double r = z_grid.point(ir);
    const double s = kTwoPi * is / kAngles;
    const double v = std::abs(extend(alpha, f, DiskPoint(r, s), quad));
    magnitude[idx] = v;
    excess[idx] = v - schwarz_bound(alpha, r);
  });

  int iworst = 0;
  for (int i = 1; i < total; ++i)
    if (excess[i] > excess[iworst]) iworst = i;

  ScanReport rep;
  rep.name = "schwarz_monotone";
  rep.grids = {{"r", z_grid}};
  rep.argmax = {z_grid.point(iworst / kAngles),
                kTwoPi * (iworst % kAngles) / kAngles};
  rep.max_value = magnitude[iworst];
  rep.tolerance = 1e-8;
  rep.claim_holds = excess[iworst] <= rep.tolerance;
  rep.extras = {{"alpha", alpha}, {"max_excess", excess[iworst]}, {"sup_f", sup}};
  return rep;
}

}  // namespace alpharm
