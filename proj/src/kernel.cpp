#include "alpharm/kernel.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "alpharm/errors.hpp"
#include "alpharm/specfun.hpp"

namespace alpharm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
}  // namespace

Params Params::make(double alpha, double p) {
  if (!(alpha > -1.0))
    throw DomainError("Params: alpha must be > -1, got " + std::to_string(alpha));
  if (!(p >= 1.0)) throw DomainError("Params: p must be >= 1");
  double q;
  if (p == 1.0)
    q = std::numeric_limits<double>::infinity();
  else if (std::isinf(p))
    q = 1.0;
  else
    q = p / (p - 1.0);
  return Params{alpha, p, q};
}

double reduce_angle(double t) {
  double s = std::fmod(t, kTwoPi);
  if (s < 0) s += kTwoPi;
  return s;
}

DiskPoint::DiskPoint(double r_, double s_) : r(r_), s(reduce_angle(s_)) {
  if (!(r >= 0.0 && r < 1.0))
    throw DomainError("DiskPoint: need 0 <= r < 1, got r=" + std::to_string(r_));
}

double c_alpha(double alpha) {
  if (!(alpha > -1.0))
    throw DomainError("c_alpha: alpha must be > -1");
  const double g = gamma(1.0 + alpha / 2.0);
  return g * g / gamma(1.0 + alpha);
}

namespace {
// |1 - z e^{-it}|^2 in the cancellation-free form (1-r)^2 + 4r sin^2((s-t)/2)
double dist2_to_one(double r, double delta) {
  const double sn = std::sin(0.5 * delta);
  return (1.0 - r) * (1.0 - r) + 4.0 * r * sn * sn;
}
}  // namespace

double kernel_value(double alpha, const DiskPoint& z, double t) {
  const double r = z.r;
  const double d2 = dist2_to_one(r, z.s - t);
  return c_alpha(alpha) * std::pow(1.0 - r * r, alpha + 1.0) /
         std::pow(d2, 0.5 * (alpha + 2.0));
}

std::complex<double> kernel_dbar(double alpha, const DiskPoint& z, double t) {
  const double r = z.r;
  const std::complex<double> zc = std::polar(r, z.s);
  const std::complex<double> eit = std::polar(1.0, t);
  const double d2 = dist2_to_one(r, z.s - t);
  const std::complex<double> num =
      c_alpha(alpha) * std::pow(1.0 - r * r, alpha) *
      (2.0 * (1.0 + alpha) * zc - eit * (2.0 + alpha + alpha * r * r));
  const std::complex<double> den =
      std::pow(d2, 0.5 * (alpha + 2.0)) * (std::conj(zc) * eit - 1.0);
  return num / den;
}

std::vector<double> kernel_peak_knots(double r, double s) {
  std::vector<double> knots;
  if (r <= 0.9) return knots;
  knots.push_back(s);
  double w = std::max(1.0 - r, 1e-9);
  while (w < kPi) {
    knots.push_back(s - w);
    knots.push_back(s + w);
    w *= 2.0;
  }
  return knots;
}

namespace {

// Circle integral of g over one period: spectral rule when smooth,
// knot-split panels when the data has breakpoints or the kernel is peaked.
template <class G>
auto circle_integral(G&& g, const DiskPoint& z, const BoundaryFunction& f,
                     const QuadratureConfig& quad) {
  std::vector<double> knots = kernel_peak_knots(z.r, z.s);
  for (double b : f.breakpoints()) {
    // map into the window centered at the kernel peak
    double u = b;
    while (u < z.s - kPi) u += kTwoPi;
    while (u > z.s + kPi) u -= kTwoPi;
    knots.push_back(u);
  }
  if (knots.empty()) return integrate_periodic(g, quad);
  return integrate(g, z.s - kPi, z.s + kPi, quad, std::move(knots));
}

}  // namespace

std::complex<double> extend(double alpha, const BoundaryFunction& f,
                            const DiskPoint& z, const QuadratureConfig& quad) {
  auto integrand = [&](double t) { return kernel_value(alpha, z, t) * f(t); };
  return circle_integral(integrand, z, f, quad) / kTwoPi;
}

DerivMatrix deriv_matrix(double alpha, const BoundaryFunction& f,
                         const DiskPoint& z, const QuadratureConfig& quad) {
  // K is real, so dz K = conj(dzbar K); kernel_dbar carries the factor 2.
  auto ig_zbar = [&](double t) { return 0.5 * kernel_dbar(alpha, z, t) * f(t); };
  auto ig_z = [&](double t) { return 0.5 * std::conj(kernel_dbar(alpha, z, t)) * f(t); };
  DerivMatrix d;
  d.fzbar = circle_integral(ig_zbar, z, f, quad) / kTwoPi;
  d.fz = circle_integral(ig_z, z, f, quad) / kTwoPi;
  d.op_norm = std::abs(d.fz) + std::abs(d.fzbar);
  return d;
}

}  // namespace alpharm
