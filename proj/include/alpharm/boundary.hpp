#pragma once

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "alpharm/disk.hpp"
#include "alpharm/quadrature.hpp"

namespace alpharm {

/// Boundary data f* on the unit circle. Named analytic forms plus uniform
/// samples (interpreted by direct trigonometric interpolation). A rotation,
/// a complex scale and a complex offset can be layered on any base form:
/// f(t) = scale * base(t - rotation) + offset.
class BoundaryFunction {
 public:
  static BoundaryFunction constant(std::complex<double> c);
  static BoundaryFunction cosine();
  static BoundaryFunction sign_of_sine();

  /// Hoelder-equality data for the pointwise bound at z:
  /// K_alpha(z e^{-it})^{q-1}, normalized to unit L^p norm (the kernel's sign
  /// pattern, identically 1, for p = inf).
  static BoundaryFunction holder_extremal(const Params& params, const DiskPoint& z,
                                          const QuadratureConfig& quad = {});

  /// Hoelder-equality data for the gradient bound at the origin:
  /// |cos t|^{q-1} sgn(cos t), normalized to unit L^p norm.
  static BoundaryFunction deriv_extremal(const Params& params);

  /// Uniform complex samples over [0, 2pi); at least 16 points.
  static BoundaryFunction sampled(std::vector<std::complex<double>> values);

  std::complex<double> operator()(double t) const;

  /// Angles in [0, 2pi) where the data has a jump or kink (quadrature splits there).
  std::vector<double> breakpoints() const;

  BoundaryFunction rotated(double phi) const;           // t -> f(t - phi)
  BoundaryFunction scaled(std::complex<double> k) const;
  BoundaryFunction shifted(std::complex<double> c) const;

  std::string name() const;

 private:
  struct Constant { std::complex<double> c; };
  struct Cosine {};
  struct SignOfSine {};
  struct Holder { double alpha; double q; DiskPoint z; double norm; };
  struct DerivExtremal { double q; double norm; };
  struct Sampled { std::vector<std::complex<double>> v; };
  using Base = std::variant<Constant, Cosine, SignOfSine, Holder, DerivExtremal, Sampled>;

  explicit BoundaryFunction(Base b) : base_(std::move(b)) {}

  Base base_;
  std::complex<double> scale_{1.0, 0.0};
  std::complex<double> offset_{0.0, 0.0};
  double rotation_ = 0.0;
};

}  // namespace alpharm
