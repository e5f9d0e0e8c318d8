#pragma once

#include <cmath>

namespace alpharm {

/// Parameter point (alpha, p) with the derived conjugate exponent q = p/(p-1).
/// Conventions: q = 1 when p = inf, q = inf when p = 1.
struct Params {
  double alpha;
  double p;
  double q;

  static Params make(double alpha, double p);

  bool p_finite() const { return std::isfinite(p); }
  bool q_finite() const { return std::isfinite(q); }
};

/// Point of the open unit disk in polar form; the argument is reduced
/// mod 2pi on construction.
struct DiskPoint {
  double r;
  double s;

  DiskPoint(double r, double s);
};

/// Reduce an angle into [0, 2pi).
double reduce_angle(double t);

}  // namespace alpharm
