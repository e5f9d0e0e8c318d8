#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alpharm/boundary.hpp"
#include "alpharm/disk.hpp"
#include "alpharm/parallel.hpp"
#include "alpharm/quadrature.hpp"

#include "json.hpp"

namespace alpharm {

/// Uniform inclusive grid of n >= 2 points on [lo, hi].
struct GridSpec {
  double lo;
  double hi;
  int n;

  GridSpec(double lo, double hi, int n);
  double point(int i) const { return lo + (hi - lo) * i / (n - 1); }
  double step() const { return (hi - lo) / (n - 1); }
};

/// Outcome of a grid maximization / positivity scan. claim_holds never
/// asserts more than grid + tolerance resolution.
struct ScanReport {
  std::string name;
  std::vector<std::pair<std::string, GridSpec>> grids;
  std::vector<double> argmax;  // one coordinate per grid, location of the max
  double max_value = 0.0;
  bool claim_holds = false;
  double tolerance = 0.0;
  std::vector<std::string> detail_columns;  // optional per-row scan table
  std::vector<std::vector<double>> details;
  std::map<std::string, double> extras;
  std::string note;
};

nlohmann::ordered_json to_json(const ScanReport& report);

/// Direct quadrature of int_0^{2pi} (1 + r^2 + 2 r cos s)^m ds.
double integral_power_cos(double m, double r, const QuadratureConfig& quad = {});

/// ((1/2pi) int K_alpha(z e^{-it})^q dt)^{1/q} at z = (r, 0); the brute-force
/// side of the pointwise-bound identity.
double q_norm_kernel(const Params& params, double r, const QuadratureConfig& quad = {});

/// Scan of H(y) = int |cos x|^q (1+r^2+2r cos(x-y))^m dx over a y-grid;
/// claims the max sits at pi/2 for m <= 1 and at 0 (mod pi) for m >= 1.
ScanReport lemma_marte_scan(double q, double r, double m, const GridSpec& y_grid,
                            const QuadratureConfig& quad = {},
                            ExecMode mode = ExecMode::OpenMP);

/// Scan of B(r,x) = int |cos(b-x)|^k (1+r^2+2r cos b)^m db over (r,x) grids;
/// claims B(r,x) <= B(1, x*) with x* = 0 for m > 1 and pi/2 for m <= 1.
ScanReport lemma_bele_scan(double k, double m, const GridSpec& r_grid,
                           const GridSpec& x_grid, const QuadratureConfig& quad = {},
                           ExecMode mode = ExecMode::OpenMP);

/// Directional gradient-kernel integral of the conjectured sharp bound,
/// split at the analytic roots of the integrand before quadrature.
double phi(double alpha, double r, double t, const QuadratureConfig& quad = {});

/// Closed forms of Phi'(t) for the proven cases alpha = 2 and alpha = 4.
double phi_prime_closed(double alpha, double r, double t);

/// Reconciliation factor between Phi(pi/2) and the conjectured |Df| bound,
/// measured by matching alpha = 2 at three radii (never hard-coded).
double phi_bound_factor(const QuadratureConfig& quad = {});

/// Per-radius maximization of Phi over t; claims the argmax is pi/2 for
/// every r in the grid.
ScanReport conjecture_scan(double alpha, const GridSpec& r_grid, const GridSpec& t_grid,
                           const QuadratureConfig& quad = {},
                           ExecMode mode = ExecMode::OpenMP);

/// Quadrature form of the Schwarz majorant: the signed half-circle integrals
/// of the kernel at z = ir against the sign pattern of the upper half plane.
double schwarz_oracle(double alpha, double r, const QuadratureConfig& quad = {});

/// Verifies |extend(f, z)| <= schwarz_bound(alpha, |z|) over a radial grid
/// (8 angles per radius). Rejects data violating ||f*||_inf <= 1 or f(0) = 0.
ScanReport schwarz_monotone_check(double alpha, const BoundaryFunction& f,
                                  const GridSpec& z_grid,
                                  const QuadratureConfig& quad = {},
                                  ExecMode mode = ExecMode::OpenMP);

}  // namespace alpharm
