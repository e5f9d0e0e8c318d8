#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "alpharm/bounds.hpp"
#include "alpharm/errors.hpp"
#include "alpharm/kernel.hpp"

using namespace alpharm;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
const double kInf = std::numeric_limits<double>::infinity();
const QuadratureConfig kQuad;
}  // namespace

TEST_CASE("m_exponent") {
  CHECK(m_exponent(Params::make(0.0, 2.0)) == doctest::Approx(1.0));
  CHECK(m_exponent(Params::make(2.0, 2.0)) == doctest::Approx(3.0));
  CHECK(m_exponent(Params::make(-0.5, kInf)) == doctest::Approx(-0.25));
  CHECK_THROWS_AS(m_exponent(Params::make(0.0, 1.0)), DomainError);
}

TEST_CASE("b_function: classical reductions and frozen value") {
  const Params pinf = Params::make(0.0, kInf);
  for (double r : {0.0, 0.3, 0.9, 1.0})
    CHECK(b_function(pinf, r) == doctest::Approx(1.0).epsilon(1e-14));

  for (double a : {-0.5, 1.0, 2.5})
    CHECK(b_function(Params::make(a, 2.0), 0.0) ==
          doctest::Approx(c_alpha(a)).epsilon(1e-14));

  // alpha=0, p=2: B(r) = sqrt(1+r^2)
  CHECK(b_function(Params::make(0.0, 2.0), 0.6) ==
        doctest::Approx(std::sqrt(1.36)).epsilon(1e-13));

  CHECK(b_function(Params::make(1.0, 2.0), 0.7) ==
        doctest::Approx(1.4049848985826782).epsilon(1e-12));

  CHECK_THROWS_AS(b_function(Params::make(0.0, 1.0), 0.5), DomainError);
}

TEST_CASE("b_constant: gamma closed form (bracket roots and all)") {
  CHECK(b_constant(Params::make(0.0, kInf)) == doctest::Approx(1.0).epsilon(1e-13));
  // the bracket equals 2; the constant is its square root
  CHECK(b_constant(Params::make(0.0, 2.0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(b_constant(Params::make(1.0, 2.0)) ==
        doctest::Approx(1.9238247452427961).epsilon(1e-12));
  CHECK_THROWS_AS(b_constant(Params::make(1.0, 1.0)), DomainError);
}

TEST_CASE("b_constant equals B at r=1 through the independent Gauss route") {
  for (auto [a, p] : {std::pair{1.0, 2.0}, {0.0, 2.0}, {2.5, 4.0}, {-0.5, kInf}}) {
    const Params params = Params::make(a, p);
    const double b = b_constant(params);
    CHECK(std::abs(b_function(params, 1.0) - b) < 1e-12 * std::max(1.0, b));
  }
}

TEST_CASE("b1_function: p=1 sup-kernel factor") {
  CHECK(b1_function(0.0, 0.0) == doctest::Approx(1.0));
  for (double r : {0.2, 0.5, 0.8})
    CHECK(b1_function(0.0, r) == doctest::Approx((1 + r) * (1 + r)).epsilon(1e-14));
  CHECK(b1_function(2.0, 0.5) == doctest::Approx(2.53125).epsilon(1e-14));
  // B1/(1-r^2) is the kernel maximum over t
  const double sup = kernel_value(2.0, DiskPoint(0.5, 0.0), 0.0);
  CHECK(b1_function(2.0, 0.5) / (1.0 - 0.25) == doctest::Approx(sup).epsilon(1e-13));
}

TEST_CASE("pointwise_bound") {
  const BoundValue bv = pointwise_bound(Params::make(0.0, kInf), 0.77);
  CHECK(bv.prefactor == 1.0);
  CHECK(bv.total == doctest::Approx(1.0).epsilon(1e-13));

  CHECK(pointwise_bound(Params::make(2.0, kInf), 0.0).total ==
        doctest::Approx(0.5).epsilon(1e-13));

  const BoundValue b1 = pointwise_bound(Params::make(2.0, 1.0), 0.5);
  CHECK(b1.prefactor == doctest::Approx(1.0 / 0.75).epsilon(1e-14));
  CHECK(b1.coefficient == doctest::Approx(2.53125).epsilon(1e-14));
  CHECK(b1.total == doctest::Approx(b1.prefactor * b1.coefficient));

  CHECK_THROWS_AS(pointwise_bound(Params::make(0.0, 2.0), 1.0), DomainError);
}

TEST_CASE("pointwise_bound degenerates like (1-r^2)^{-1/p} toward the boundary") {
  const Params params = Params::make(1.0, 2.0);  // m=2, series terminates at any r
  const double b = b_constant(params);
  double prev = 0.0;
  for (int k = 2; k <= 12; ++k) {
    const double r = 1.0 - std::pow(2.0, -k);
    const double total = pointwise_bound(params, r).total;
    CHECK(total > prev);
    prev = total;
    if (k == 12)
      CHECK(total * std::pow(1.0 - r * r, 0.5) == doctest::Approx(b).epsilon(1e-3));
  }
}

TEST_CASE("P, Q, U terms") {
  CHECK(p_term(0.0, 0.7, 2.0) == 0.0);
  CHECK(p_term(1.0, 1.0, 1.0) == doctest::Approx(1.0));
  CHECK(p_term(2.0, 0.5, 2.0) == doctest::Approx(12.0));
  CHECK(q_term(0.0, 1.0) == doctest::Approx(2.0));
  CHECK(q_term(2.0, 2.0) == doctest::Approx(16.0));
  CHECK(q_term(0.5, 3.0) == doctest::Approx(15.625));

  CHECK(u_term(0.0, 1.0) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
  CHECK(u_term(0.0, 2.0) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
  // int (2+2cos)^2 = 12 pi
  CHECK(u_term(1.0, 2.0) == doctest::Approx(12.0 * kPi).epsilon(1e-14));
}

TEST_CASE("v_term: closed values and the eta rule") {
  // m=0: integrand is |cos| alone
  const Params pm0 = Params::make(0.0, kInf);
  for (double r : {0.0, 0.5, 0.9, 1.0})
    CHECK(v_term(pm0, r, kQuad) == doctest::Approx(4.0).epsilon(1e-11));

  // m=1: pi (1+r^2), and the r=1 Beta form joins continuously
  const Params pm1 = Params::make(0.0, 2.0);
  for (double r : {0.0, 0.37, 0.8})
    CHECK(v_term(pm1, r, kQuad) ==
          doctest::Approx(kPi * (1.0 + r * r)).epsilon(1e-11));
  CHECK(v_term(pm1, 1.0, kQuad) == doctest::Approx(2.0 * kPi).epsilon(1e-13));

  // m=3 at r=0.5, eta* = 0 (frozen via independent quadrature)
  CHECK(v_term(Params::make(2.0, 2.0), 0.5, kQuad) ==
        doctest::Approx(14.971652489763858).epsilon(1e-11));

  // negative m at r=1 goes through the Beta form, not the singular integral
  const double v = v_term(Params::make(-0.5, kInf), 1.0, kQuad);  // m = -1/4
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
}

TEST_CASE("v_term r=1 Beta form agrees with quadrature at a kinked exponent") {
  // m = 0.5: integrable kink at b = pi, both routes work
  const Params params = Params::make(-0.5, 2.0);  // q=2, m = 0.5
  const double beta_route = v_term(params, 1.0, kQuad);
  auto integrand = [&](double b) {
    const double c = std::cos(b + 0.5 * kPi);
    return std::abs(c) * std::abs(c) * std::pow(2.0 + 2.0 * std::cos(b), 0.5);
  };
  const double quad_route =
      integrate(integrand, 0.0, 2.0 * kPi, kQuad, {0.5 * kPi, kPi, 1.5 * kPi});
  CHECK(beta_route == doctest::Approx(quad_route).epsilon(1e-9));
}

TEST_CASE("c_function and c_constant: classical values and frozen points") {
  const Params pinf = Params::make(0.0, kInf);
  for (double r : {0.0, 0.4, 0.9})
    CHECK(c_function(pinf, r, kQuad) == doctest::Approx(4.0 / kPi).epsilon(1e-12));
  CHECK(c_constant(pinf, kQuad) == doctest::Approx(4.0 / kPi).epsilon(1e-12));

  const Params p02 = Params::make(0.0, 2.0);
  CHECK(c_function(p02, 0.0, kQuad) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(c_constant(p02, kQuad) == doctest::Approx(2.0).epsilon(1e-12));

  CHECK(c_function(Params::make(1.0, 2.0), 0.5, kQuad) ==
        doctest::Approx(4.6068975218210896).epsilon(1e-11));
  CHECK(c_constant(Params::make(1.0, 2.0), kQuad) ==
        doctest::Approx(7.002827776542327).epsilon(1e-11));

  CHECK_THROWS_AS(c_function(Params::make(0.0, 1.0), 0.5, kQuad), DomainError);
}

TEST_CASE("df0_bound") {
  CHECK(df0_bound(Params::make(0.0, kInf)) ==
        doctest::Approx(4.0 / kPi).epsilon(1e-13));
  CHECK(df0_bound(Params::make(0.0, 2.0)) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
  CHECK(df0_bound(Params::make(2.0, kInf)) ==
        doctest::Approx(4.0 / kPi).epsilon(1e-13));
  CHECK(df0_bound(Params::make(1.0, 2.0)) ==
        doctest::Approx(1.6660811018093873).epsilon(1e-13));
  CHECK(df0_bound(Params::make(1.0, kInf)) == doctest::Approx(1.5).epsilon(1e-13));
  CHECK_THROWS_AS(df0_bound(Params::make(1.0, 1.0)), DomainError);
}

TEST_CASE("df0_bound never exceeds C at the origin (equal at alpha=0)") {
  for (double a : {0.0, 1.0, 2.0, 2.5}) {
    for (double p : {2.0, 4.0, kInf}) {
      const Params params = Params::make(a, p);
      const double df0 = df0_bound(params);
      const double c0 = c_function(params, 0.0, kQuad);
      CHECK(df0 <= c0 + 1e-10);
      if (a == 0.0) CHECK(df0 == doctest::Approx(c0).epsilon(1e-8));
    }
  }
}

TEST_CASE("schwarz_bound: classical case and frozen values") {
  CHECK(schwarz_bound(1.7, 0.0) == 0.0);
  for (int i = 1; i <= 9; ++i) {
    const double r = 0.1 * i;
    CHECK(schwarz_bound(0.0, r) ==
          doctest::Approx(4.0 / kPi * std::atan(r)).epsilon(1e-12));
  }
  CHECK(schwarz_bound(2.0, 0.5) ==
        doctest::Approx(0.55994497583635759).epsilon(1e-12));
  CHECK(schwarz_bound(4.0, 0.3) ==
        doctest::Approx(0.19170359013578391).epsilon(1e-12));
  CHECK_THROWS_AS(schwarz_bound(-1.0, 0.5), DomainError);
  CHECK_THROWS_AS(schwarz_bound(0.0, 1.0), DomainError);
}

TEST_CASE("schwarz_bound stays below 1 on the whole grid (majorant property)") {
  for (double a : {-0.5, 0.0, 1.0, 2.0, 4.0}) {
    for (int i = 1; i <= 99; ++i) {
      const double r = 0.01 * i;
      const double v = schwarz_bound(a, r);
      CHECK(v > 0.0);
      CHECK(v < 1.0);
    }
  }
}

TEST_CASE("schwarz_bound: non-convergence near the boundary is reported") {
  SeriesConfig small;
  small.max_terms = 20000;
  CHECK_THROWS_AS(schwarz_bound(1.0, 0.999, small), NonConvergenceError);
}

TEST_CASE("grad_bound_conjecture: proven rational forms") {
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(grad_bound_conjecture(2.0, r) ==
          doctest::Approx(4.0 * (1 + r * r) / (kPi * (1 - r * r))).epsilon(1e-14));
    const double r2 = r * r;
    CHECK(grad_bound_conjecture(4.0, r) ==
          doctest::Approx((6 + 20 * r2 + 6 * r2 * r2) / (3 * kPi * (1 - r2)))
              .epsilon(1e-14));
  }
}

TEST_CASE("grad_bound_conjecture: removable singularity at r=0") {
  CHECK(grad_bound_conjecture(0.0, 0.0) == doctest::Approx(4.0 / kPi).epsilon(1e-15));
  for (double a : {0.5, 2.0, 3.0})
    CHECK(grad_bound_conjecture(a, 0.0) ==
          doctest::Approx(2.0 * (2.0 + a) * c_alpha(a) / kPi).epsilon(1e-14));
  // the series branch joins the direct formula continuously
  const double lo = grad_bound_conjecture(1.3, 0.99995e-4);
  const double hi = grad_bound_conjecture(1.3, 1.00005e-4);
  CHECK(std::abs(lo - hi) < 1e-10 * std::abs(hi));
}
