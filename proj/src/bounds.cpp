#include "alpharm/bounds.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "alpharm/errors.hpp"
#include "alpharm/kernel.hpp"

namespace alpharm {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;

void require_unit_interval(double r, const char* who, bool allow_one) {
  const bool ok = r >= 0.0 && (allow_one ? r <= 1.0 : r < 1.0);
  if (!ok)
    throw DomainError(std::string(who) + ": r outside " +
                      (allow_one ? "[0,1]" : "[0,1)"));
}
}  // namespace

double m_exponent(const Params& params) {
  if (!params.q_finite())
    throw DomainError("m_exponent: finite q required (p > 1)");
  return params.q * (1.0 + params.alpha / 2.0) - 1.0;
}

double b_function(const Params& params, double r, const SeriesConfig& cfg) {
  require_unit_interval(r, "b_function", /*allow_one=*/true);
  const double m = m_exponent(params);
  if (r == 1.0 && !(m > -0.5))
    throw DomainError("b_function: r=1 needs q(1+alpha/2) > 1/2");
  const double x = 4.0 * r * r / ((1.0 + r * r) * (1.0 + r * r));
  const double f = hyp2f1(0.5 * (1.0 - m), -0.5 * m, 1.0, x, cfg);
  return c_alpha(params.alpha) *
         std::pow(std::pow(1.0 + r * r, m) * f, 1.0 / params.q);
}

double b_constant(const Params& params) {
  const double a = params.alpha;
  const double q = params.q;
  if (!params.q_finite()) throw DomainError("b_constant: p must exceed 1");
  const double garg = -0.5 + q * (1.0 + a / 2.0);
  if (!(garg > 0.0))
    throw DomainError("b_constant: q(1+alpha/2) > 1/2 required");
  const double num = std::pow(2.0, -1.0 + (2.0 + a) * q) * gamma(garg);
  const double den = 2.0 * std::sqrt(kPi) * gamma(q * (1.0 + a / 2.0));
  return c_alpha(a) * std::pow(num / den, 1.0 / q);
}

double b1_function(double alpha, double r) {
  require_unit_interval(r, "b1_function", /*allow_one=*/true);
  return c_alpha(alpha) * std::pow(1.0 + r, alpha + 2.0);
}

BoundValue pointwise_bound(const Params& params, double r, const SeriesConfig& cfg) {
  require_unit_interval(r, "pointwise_bound", /*allow_one=*/false);
  BoundValue bv;
  bv.prefactor = params.p_finite()
                     ? std::pow(1.0 - r * r, -1.0 / params.p)
                     : 1.0;
  bv.coefficient = (params.p == 1.0) ? b1_function(params.alpha, r)
                                     : b_function(params, r, cfg);
  bv.total = bv.prefactor * bv.coefficient;
  return bv;
}

double p_term(double alpha, double r, double q) {
  if (!(q >= 1.0) || std::isinf(q))
    throw DomainError("p_term: finite q >= 1 required");
  // q (2+alpha+|alpha|)^{q-1} |alpha| r: the additive constant of the
  // derivative estimate. For alpha >= 0 this is q (2(1+alpha))^{q-1} alpha r;
  // the |alpha| form keeps it a valid upper-bound term on -1 < alpha < 0.
  return q * std::pow(2.0 + alpha + std::abs(alpha), q - 1.0) *
         std::abs(alpha) * r;
}

double q_term(double alpha, double q) {
  if (!(q >= 1.0)) throw DomainError("q_term: q >= 1 required");
  return std::pow(2.0 + alpha, q);
}

double u_term(double alpha, double q) {
  const double garg = -0.5 + q * (1.0 + alpha / 2.0);
  if (!(garg > 0.0))
    throw DomainError("u_term: q(1+alpha/2) > 1/2 required");
  return std::pow(2.0, -1.0 + (2.0 + alpha) * q) * std::sqrt(kPi) * gamma(garg) /
         gamma(q * (1.0 + alpha / 2.0));
}

double v_term(const Params& params, double r, const QuadratureConfig& quad) {
  require_unit_interval(r, "v_term", /*allow_one=*/true);
  const double q = params.q;
  if (!params.q_finite()) throw DomainError("v_term: p must exceed 1");
  const double m = m_exponent(params);
  const double eta = (m <= 1.0) ? 0.5 * kPi : 0.0;

  if (r == 1.0 && m <= 1.0) {
    // eta = pi/2 branch separates: int |sin b|^q (2+2cos b)^m db in Beta form
    if (!(2.0 * m > -1.0))
      throw DomainError("v_term: r=1 integrable only for 2m > -1");
    return std::pow(2.0, q + 2.0 * m + 1.0) * gamma(0.5 * (q + 1.0)) *
           gamma(m + 0.5 * (q + 1.0)) / gamma(q + m + 1.0);
  }

  auto integrand = [&](double b) {
    const double cs = std::cos(0.5 * b);  // 1+r^2+2r cos b, cancellation-free
    const double w = (1.0 - r) * (1.0 - r) + 4.0 * r * cs * cs;
    return std::pow(std::abs(std::cos(b + eta)), q) * std::pow(w, m);
  };
  // kinks of |cos(b+eta)|^q, plus the zero of the weight at b = pi when r = 1
  std::vector<double> knots = {reduce_angle(0.5 * kPi - eta),
                               reduce_angle(1.5 * kPi - eta)};
  if (r == 1.0) knots.push_back(kPi);
  return integrate(integrand, 0.0, kTwoPi, quad, std::move(knots));
}

double c_function(const Params& params, double r, const QuadratureConfig& quad) {
  const double a = params.alpha;
  const double q = params.q;
  const double pu = p_term(a, r, q) * u_term(a, q);
  const double qv = q_term(a, q) * v_term(params, r, quad);
  return c_alpha(a) * std::pow((pu + qv) / kTwoPi, 1.0 / q);
}

double c_constant(const Params& params, const QuadratureConfig& quad) {
  return c_function(params, 1.0, quad);
}

double df0_bound(const Params& params) {
  if (!params.q_finite())
    throw DomainError("df0_bound: undefined at p = 1 (q infinite)");
  const double q = params.q;
  const double moment = gamma(0.5 * (1.0 + q)) /
                        (std::sqrt(kPi) * gamma(0.5 * (2.0 + q)));
  return (2.0 + params.alpha) * c_alpha(params.alpha) * std::pow(moment, 1.0 / q);
}

double schwarz_bound(double alpha, double r, const SeriesConfig& cfg) {
  if (!(alpha > -1.0)) throw DomainError("schwarz_bound: alpha must be > -1");
  require_unit_interval(r, "schwarz_bound", /*allow_one=*/false);
  if (r == 0.0) return 0.0;
  const double r2 = r * r;
  const double x = 4.0 * r2 / ((1.0 + r2) * (1.0 + r2));
  const double f =
      hyp_pfq({{1.0, 1.0 + alpha / 4.0, 1.5 + alpha / 4.0}, {1.5, 1.5}, x}, cfg);
  return 2.0 * (2.0 + alpha) * r * std::pow(1.0 - r2, 1.0 + alpha) *
         c_alpha(alpha) * f / (std::pow(1.0 + r2, 2.0 + alpha / 2.0) * kPi);
}

double grad_bound_conjecture(double alpha, double r) {
  if (!(alpha > -1.0)) throw DomainError("grad_bound_conjecture: alpha must be > -1");
  require_unit_interval(r, "grad_bound_conjecture", /*allow_one=*/false);
  const double c = 2.0 + alpha;
  const double ca = c_alpha(alpha);
  if (r < 1e-4) {
    // odd part of (1+r)^c about r=0; avoids cancellation, exact limit at r=0
    const double r2 = r * r;
    double series = c;
    series += c * (c - 1.0) * (c - 2.0) / 6.0 * r2;
    series += c * (c - 1.0) * (c - 2.0) * (c - 3.0) * (c - 4.0) / 120.0 * r2 * r2;
    return ca * 2.0 * series / (kPi * (1.0 - r2));
  }
  return ca * (std::pow(1.0 + r, c) - std::pow(1.0 - r, c)) /
         (kPi * r * (1.0 - r * r));
}

}  // namespace alpharm
