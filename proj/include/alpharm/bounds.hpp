#pragma once

#include "alpharm/disk.hpp"
#include "alpharm/quadrature.hpp"
#include "alpharm/specfun.hpp"

namespace alpharm {

/// One evaluated right-hand side: total = prefactor * coefficient multiplies
/// the boundary norm ||f*||_p.
struct BoundValue {
  double prefactor;    // weight in r, e.g. (1-r^2)^{-1/p}
  double coefficient;  // sharp function value at r
  double total;
};

/// m = q(1 + alpha/2) - 1, the exponent governing every circle-integral
/// closed form; finite only for p > 1.
double m_exponent(const Params& params);

/// Sharp pointwise factor B_{alpha,p}(r) in hypergeometric closed form (p > 1).
double b_function(const Params& params, double r, const SeriesConfig& cfg = {});

/// b_{alpha,p} = B_{alpha,p}(1) in closed gamma form.
double b_constant(const Params& params);

/// p = 1 endpoint: sup-kernel factor c_alpha (1+r)^{alpha+2}, so that
/// |f(z)| <= B1/(1-r^2) ||f*||_1.
double b1_function(double alpha, double r);

/// Full right-hand side of the pointwise estimate at radius r.
BoundValue pointwise_bound(const Params& params, double r, const SeriesConfig& cfg = {});

double p_term(double alpha, double r, double q);  // q (2(1+alpha))^{q-1} alpha r
double q_term(double alpha, double q);            // (2+alpha)^q

/// Closed gamma form of the r=1 circle integral int (2+2cos b)^m db.
double u_term(double alpha, double q);

/// max_eta int |cos(b+eta)|^q (1+r^2+2r cos b)^m db, with eta fixed by the
/// max-location rule (pi/2 for m <= 1, 0 for m >= 1). The r = 1, m <= 1
/// evaluation uses the closed Beta form rather than quadrature.
double v_term(const Params& params, double r, const QuadratureConfig& quad = {});

/// Gradient-bound coefficient C_{alpha,p}(r) = c_alpha [(P U + Q V)/(2pi)]^{1/q}.
double c_function(const Params& params, double r, const QuadratureConfig& quad = {});

/// c_{alpha,p} = C_{alpha,p}(1).
double c_constant(const Params& params, const QuadratureConfig& quad = {});

/// Sharp origin bound: |Df(0)| <= df0_bound * ||f*||_p.
double df0_bound(const Params& params);

/// Radial Schwarz majorant for alpha-harmonic self-maps of the disk fixing 0.
double schwarz_bound(double alpha, double r, const SeriesConfig& cfg = {});

/// Conjectured sharp gradient coefficient for ||f*||_inf data
/// (proven for alpha = 2 and 4); analytic limit 2(2+alpha)c_alpha/pi at r=0.
double grad_bound_conjecture(double alpha, double r);

}  // namespace alpharm
