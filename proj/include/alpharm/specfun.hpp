#pragma once

#include <cstddef>
#include <vector>

namespace alpharm {

/// Truncation control for hypergeometric series.
struct SeriesConfig {
  double rel_tol = 1e-14;          // relative truncation tolerance, > 0
  std::size_t max_terms = 2000000; // term budget before non-convergence is raised
};

/// Parameters of a generalized hypergeometric series sum_k prod(upper)_k / (prod(lower)_k k!) x^k.
/// Lower parameters must avoid nonpositive integers; |x| < 1, or |x| = 1 with
/// sum(lower) - sum(upper) > 0.
struct HypArg {
  std::vector<double> upper;
  std::vector<double> lower;
  double x = 0.0;
};

/// Gamma function, Lanczos g=7 with reflection for x < 0.5.
/// Relative error <= ~2.5e-14 on [-50, 50] away from the poles.
double gamma(double x);

/// Rising factorial y(y+1)...(y+k-1); 1 for k = 0.
double pochhammer(double y, int k);

/// Generalized binomial a(a-1)...(a-k+1)/k! for real a, computed by the
/// finite product (valid at negative integer a where gamma ratios break down).
double binom_real(double a, int k);

/// Gauss hypergeometric 2F1(a,b;c;x).
double hyp2f1(double a, double b, double c, double x, const SeriesConfig& cfg = {});

/// Generalized pFq series.
double hyp_pfq(const HypArg& arg, const SeriesConfig& cfg = {});

/// sin(pi*x) with exact integer argument reduction (keeps the gamma
/// reflection accurate for large |x|).
double sin_pi(double x);

}  // namespace alpharm
