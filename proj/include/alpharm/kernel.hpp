#pragma once

#include <complex>
#include <vector>

#include "alpharm/boundary.hpp"
#include "alpharm/disk.hpp"
#include "alpharm/quadrature.hpp"

namespace alpharm {

/// Wirtinger derivatives of an extension and the operator norm
/// |Df| = |f_z| + |f_zbar| of its real differential.
struct DerivMatrix {
  std::complex<double> fz;
  std::complex<double> fzbar;
  double op_norm;
};

/// Normalizing constant Gamma(1+a/2)^2 / Gamma(1+a); requires alpha > -1.
double c_alpha(double alpha);

/// Weighted Poisson kernel K_alpha(z e^{-it}) =
/// c_alpha (1-r^2)^{alpha+1} / (1 + r^2 - 2 r cos(s-t))^{(alpha+2)/2}.
double kernel_value(double alpha, const DiskPoint& z, double t);

/// 2 dbar_z of K_alpha(z e^{-it}); the full z-gradient of the kernel.
std::complex<double> kernel_dbar(double alpha, const DiskPoint& z, double t);

/// Boundary-integral extension (1/2pi) int K_alpha(z e^{-it}) f*(e^{it}) dt.
std::complex<double> extend(double alpha, const BoundaryFunction& f,
                            const DiskPoint& z, const QuadratureConfig& quad = {});

/// Wirtinger derivatives of the extension at z, by quadrature of the
/// kernel-gradient integrals.
DerivMatrix deriv_matrix(double alpha, const BoundaryFunction& f,
                         const DiskPoint& z, const QuadratureConfig& quad = {});

/// Geometric shells around the kernel peak t = s, used to pre-split circle
/// integrals once the kernel concentrates (r > 0.9). Empty otherwise.
std::vector<double> kernel_peak_knots(double r, double s);

}  // namespace alpharm
