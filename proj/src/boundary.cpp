#include "alpharm/boundary.hpp"

#include <cmath>

#include "alpharm/errors.hpp"
#include "alpharm/kernel.hpp"
#include "alpharm/specfun.hpp"

namespace alpharm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

// (1/2pi) int |cos t|^q dt in closed gamma form.
double abs_cos_moment(double q) {
  return gamma(0.5 * (1.0 + q)) / (std::sqrt(kPi) * gamma(0.5 * (2.0 + q)));
}

double wrap_to_pm_pi(double u) {
  u = std::fmod(u, kTwoPi);
  if (u > kPi) u -= kTwoPi;
  if (u <= -kPi) u += kTwoPi;
  return u;
}

// Direct (FFT-free) trigonometric interpolation of uniform samples.
std::complex<double> trig_interp(const std::vector<std::complex<double>>& v, double t) {
  const int n = static_cast<int>(v.size());
  const bool even = (n % 2) == 0;
  std::complex<double> acc{};
  for (int j = 0; j < n; ++j) {
    const double u = wrap_to_pm_pi(t - kTwoPi * j / n);
    if (std::abs(u) < 1e-13) return v[j];
    const double w = even ? std::sin(0.5 * n * u) / (n * std::tan(0.5 * u))
                          : std::sin(0.5 * n * u) / (n * std::sin(0.5 * u));
    acc += v[j] * w;
  }
  return acc;
}

}  // namespace

BoundaryFunction BoundaryFunction::constant(std::complex<double> c) {
  return BoundaryFunction(Base{Constant{c}});
}

BoundaryFunction BoundaryFunction::cosine() { return BoundaryFunction(Base{Cosine{}}); }

BoundaryFunction BoundaryFunction::sign_of_sine() {
  return BoundaryFunction(Base{SignOfSine{}});
}

BoundaryFunction BoundaryFunction::holder_extremal(const Params& params,
                                                   const DiskPoint& z,
                                                   const QuadratureConfig& quad) {
  if (!params.q_finite())
    throw DomainError("holder_extremal: p must exceed 1 (finite q needed)");
  double norm = 1.0;
  if (params.p_finite()) {
    // unit L^p norm: ||K^{q-1}||_p = ((1/2pi) int K^q)^{1/p} since (q-1)p = q
    const double alpha = params.alpha;
    auto kq = [&](double t) {
      return std::pow(kernel_value(alpha, z, t), params.q);
    };
    const auto knots = kernel_peak_knots(z.r, z.s);
    const double mean =
        (knots.empty() ? integrate_periodic(kq, quad)
                       : integrate(kq, z.s - kPi, z.s + kPi, quad, knots)) /
        kTwoPi;
    norm = std::pow(mean, 1.0 / params.p);
  }
  return BoundaryFunction(Base{Holder{params.alpha, params.q, z, norm}});
}

BoundaryFunction BoundaryFunction::deriv_extremal(const Params& params) {
  if (!params.q_finite())
    throw DomainError("deriv_extremal: p must exceed 1 (finite q needed)");
  double norm = 1.0;
  if (params.p_finite())
    norm = std::pow(abs_cos_moment(params.q), 1.0 / params.p);
  return BoundaryFunction(Base{DerivExtremal{params.q, norm}});
}

BoundaryFunction BoundaryFunction::sampled(std::vector<std::complex<double>> values) {
  if (values.size() < 16)
    throw DomainError("sampled: need at least 16 uniform samples");
  return BoundaryFunction(Base{Sampled{std::move(values)}});
}

std::complex<double> BoundaryFunction::operator()(double t) const {
  const double u = t - rotation_;
  std::complex<double> v;
  if (const auto* c = std::get_if<Constant>(&base_)) {
    v = c->c;
  } else if (std::holds_alternative<Cosine>(base_)) {
    v = std::cos(u);
  } else if (std::holds_alternative<SignOfSine>(base_)) {
    const double s = std::sin(u);
    v = (s > 0.0) ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
  } else if (const auto* h = std::get_if<Holder>(&base_)) {
    v = std::pow(kernel_value(h->alpha, h->z, u), h->q - 1.0) / h->norm;
  } else if (const auto* d = std::get_if<DerivExtremal>(&base_)) {
    const double c = std::cos(u);
    const double sgn = (c > 0.0) ? 1.0 : (c < 0.0 ? -1.0 : 0.0);
    v = std::pow(std::abs(c), d->q - 1.0) * sgn / d->norm;
  } else {
    v = trig_interp(std::get<Sampled>(base_).v, u);
  }
  return scale_ * v + offset_;
}

std::vector<double> BoundaryFunction::breakpoints() const {
  std::vector<double> pts;
  if (std::holds_alternative<SignOfSine>(base_)) {
    pts = {0.0, kPi};
  } else if (const auto* d = std::get_if<DerivExtremal>(&base_)) {
    if (d->q < 3.0) pts = {0.5 * kPi, 1.5 * kPi};  // |cos|^{q-1} kink/jump
  } else if (const auto* h = std::get_if<Holder>(&base_)) {
    (void)h;  // smooth for r < 1
  }
  for (double& b : pts) b = reduce_angle(b + rotation_);
  return pts;
}

BoundaryFunction BoundaryFunction::rotated(double phi) const {
  BoundaryFunction f = *this;
  f.rotation_ += phi;
  return f;
}

BoundaryFunction BoundaryFunction::scaled(std::complex<double> k) const {
  BoundaryFunction f = *this;
  f.scale_ *= k;
  f.offset_ *= k;
  return f;
}

BoundaryFunction BoundaryFunction::shifted(std::complex<double> c) const {
  BoundaryFunction f = *this;
  f.offset_ += c;
  return f;
}

std::string BoundaryFunction::name() const {
  if (std::holds_alternative<Constant>(base_)) return "constant";
  if (std::holds_alternative<Cosine>(base_)) return "cosine";
  if (std::holds_alternative<SignOfSine>(base_)) return "sign_of_sine";
  if (std::holds_alternative<Holder>(base_)) return "holder_extremal";
  if (std::holds_alternative<DerivExtremal>(base_)) return "deriv_extremal";
  return "sampled";
}

}  // namespace alpharm
