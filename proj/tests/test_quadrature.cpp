#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "alpharm/errors.hpp"
#include "alpharm/quadrature.hpp"

using namespace alpharm;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
}

TEST_CASE("periodic rule: smooth integrands to near machine accuracy") {
  QuadratureConfig quad;
  const double i0 = integrate_periodic([](double t) { return std::exp(std::cos(t)); }, quad) / kTwoPi;
  CHECK(i0 == doctest::Approx(1.2660658777520083).epsilon(1e-13));  // I_0(1)

  const double r = 0.37;
  const double m1 = integrate_periodic(
      [&](double t) { return 1.0 + r * r + 2.0 * r * std::cos(t); }, quad);
  CHECK(m1 == doctest::Approx(kTwoPi * (1.0 + r * r)).epsilon(1e-14));
}

TEST_CASE("periodic rule: complex integrand") {
  QuadratureConfig quad;
  const auto v = integrate_periodic(
      [](double t) { return std::polar(1.0, t) * std::cos(t); }, quad);
  CHECK(std::abs(v - std::complex<double>(kPi, 0.0)) < 1e-12);
}

TEST_CASE("panel rule with knots: kinked integrands") {
  QuadratureConfig quad;
  const double a4 = integrate([](double t) { return std::abs(std::cos(t)); },
                              0.0, kTwoPi, quad, {0.5 * kPi, 1.5 * kPi});
  CHECK(a4 == doctest::Approx(4.0).epsilon(1e-12));

  const double s3 = integrate(
      [](double t) { return std::pow(std::abs(std::sin(t)), 3.0); },
      0.0, kTwoPi, quad, {kPi});
  CHECK(s3 == doctest::Approx(8.0 / 3.0).epsilon(1e-11));
}

TEST_CASE("panel rule: adaptive refinement handles unadvertised kinks") {
  QuadratureConfig quad;
  const double v = integrate([](double t) { return std::abs(std::sin(t)); },
                             0.0, kTwoPi, quad);
  CHECK(v == doctest::Approx(4.0).epsilon(1e-9));
}

TEST_CASE("panel rule: peaked integrand via geometric shells") {
  QuadratureConfig quad;
  // classical Poisson kernel mean is exactly 1 for any r < 1
  const double r = 0.999;
  auto f = [&](double t) {
    return (1.0 - r * r) / (1.0 + r * r - 2.0 * r * std::cos(t));
  };
  std::vector<double> knots;
  for (double w = 1.0 - r; w < kPi; w *= 2.0) {
    knots.push_back(-w);
    knots.push_back(w);
  }
  knots.push_back(0.0);
  const double mean = integrate(f, -kPi, kPi, quad, knots) / kTwoPi;
  CHECK(mean == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("failure paths are reported, not silently truncated") {
  QuadratureConfig starved;
  starved.abs_tol = 1e-15;
  starved.rel_tol = 1e-15;
  starved.max_depth = 2;
  CHECK_THROWS_AS(integrate([](double t) { return std::sqrt(std::abs(std::sin(7.3 * t))); },
                            0.0, kTwoPi, starved),
                  QuadratureError);
}
