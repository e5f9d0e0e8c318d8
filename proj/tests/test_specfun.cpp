#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "alpharm/errors.hpp"
#include "alpharm/specfun.hpp"

using namespace alpharm;

namespace {
// libc still declares a global ::gamma, so qualify ours
double gamma_fn(double x) { return alpharm::gamma(x); }

constexpr double kSqrtPi = 1.7724538509055160272981674833411452;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}
}  // namespace

TEST_CASE("gamma: pinned values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rel_err(gamma_fn(0.5), kSqrtPi) < 1e-14);

  // product recursion from Gamma(0.5): 6.5 * 5.5 * ... * 0.5 * sqrt(pi)
  double want = kSqrtPi;
  for (double x = 0.5; x < 7.0; x += 1.0) want *= x;
  CHECK(rel_err(gamma_fn(7.5), want) < 1e-13);
  CHECK(gamma_fn(7.5) == doctest::Approx(1871.2543057977883).epsilon(1e-12));
}

TEST_CASE("gamma: functional equation on x in {0.1,...,10}") {
  for (int i = 1; i <= 100; ++i) {
    const double x = 0.1 * i;
    CHECK(rel_err(gamma_fn(x + 1.0), x * gamma_fn(x)) < 1e-12);
  }
}

TEST_CASE("gamma: reflection range and accuracy contract") {
  // spot values against the recursion Gamma(x) = Gamma(x+n)/((x)(x+1)...)
  for (double x : {-0.5, -2.5, -10.3, -49.5, 12.3, 49.9}) {
    double shifted = x;
    double denom = 1.0;
    while (shifted < 20.0) {
      denom *= shifted;
      shifted += 1.0;
    }
    CHECK(rel_err(gamma_fn(x), gamma_fn(shifted) / denom) < 1e-12);
  }
  CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
  CHECK_THROWS_AS(gamma_fn(-3.0), DomainError);
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 4) == 360.0);
  CHECK(pochhammer(-0.5, 0) == 1.0);
  // (-1.5)(-0.5)(0.5) = +0.375
  CHECK(pochhammer(-1.5, 3) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK_THROWS_AS(pochhammer(1.0, -1), DomainError);
}

TEST_CASE("pochhammer vs gamma ratio (well-conditioned range)") {
  for (double y = 0.1; y <= 5.0; y += 0.3) {
    for (int k : {0, 1, 3, 7}) {
      const double via_gamma = gamma_fn(y + k) / gamma_fn(y);
      CHECK(rel_err(pochhammer(y, k), via_gamma) < 1e-10);
    }
  }
}

TEST_CASE("binom_real") {
  CHECK(binom_real(5.0, 2) == 10.0);
  CHECK(binom_real(-3.7, 0) == 1.0);
  CHECK(binom_real(-2.0, 3) == -4.0);
  // against the pochhammer identity (-1)^k (-a)_k / k!
  for (double a : {2.5, -0.5, 4.0}) {
    for (int k : {1, 2, 5}) {
      double kfact = 1.0;
      for (int j = 2; j <= k; ++j) kfact *= j;
      const double alt = ((k % 2) ? -1.0 : 1.0) * pochhammer(-a, k) / kfact;
      CHECK(binom_real(a, k) == doctest::Approx(alt).epsilon(1e-13));
    }
  }
}

TEST_CASE("hyp2f1: trivial and closed-form points") {
  CHECK(hyp2f1(0.7, -1.3, 2.2, 0.0) == 1.0);
  // -ln(1-x)/x at x = 1/2 is 2 ln 2
  CHECK(hyp2f1(1.0, 1.0, 2.0, 0.5) ==
        doctest::Approx(1.3862943611198906).epsilon(1e-13));
  // symmetry in the upper parameters is exact by construction
  CHECK(hyp2f1(0.3, 1.7, 1.9, 0.42) == hyp2f1(1.7, 0.3, 1.9, 0.42));
}

TEST_CASE("hyp2f1: negative integer upper parameter terminates") {
  // degree-3 polynomial, evaluable anywhere
  const double a = -3.0, b = 2.5, c = 1.7, x = 0.8;
  double sum = 0.0;
  double kfact = 1.0;
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) kfact *= k;
    sum += pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * kfact) *
           std::pow(x, k);
  }
  CHECK(hyp2f1(a, b, c, x) == doctest::Approx(sum).epsilon(1e-14));
  // termination means x past 1 is fine for polynomials
  CHECK(std::isfinite(hyp2f1(-2.0, 1.0, 3.0, 1.5)));
}

TEST_CASE("hyp2f1: domain and convergence errors") {
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, -2.0, 0.3), DomainError);   // c nonpositive int
  CHECK_THROWS_AS(hyp2f1(0.5, 0.5, 1.0, 1.2), DomainError);    // |x| > 1
  CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 1.5, 1.0), DomainError);    // x=1, c-a-b <= 0
  SeriesConfig tiny;
  tiny.max_terms = 4;
  CHECK_THROWS_AS(hyp2f1(0.5, 0.7, 1.1, 0.9, tiny), NonConvergenceError);
}

TEST_CASE("hyp2f1: Gauss value at x=1") {
  // Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b))
  const double a = 0.3, b = -0.2, c = 1.4;
  const double want = gamma_fn(c) * gamma_fn(c - a - b) / (gamma_fn(c - a) * gamma_fn(c - b));
  CHECK(rel_err(hyp2f1(a, b, c, 1.0), want) < 1e-13);
}

TEST_CASE("hyp_pfq: basics") {
  CHECK(hyp_pfq({{1.0, 2.0}, {1.5}, 0.0}) == 1.0);
  CHECK(hyp_pfq({{0.0, 2.0, 3.0}, {1.5, 1.5}, 0.7}) == 1.0);  // zero upper param
  CHECK_THROWS_AS(hyp_pfq({{1.0}, {-1.0}, 0.5}), DomainError);
}

TEST_CASE("hyp_pfq: frozen 3F2 value vs direct high-precision summation") {
  // (1.5)_k cancels one lower 1.5, leaving 2F1(1,2;1.5;0.3)
  const double got = hyp_pfq({{1.0, 1.5, 2.0}, {1.5, 1.5}, 0.3});
  CHECK(got == doctest::Approx(1.6177697231364711).epsilon(1e-13));

  // independent oracle: direct long-double summation, 10000 terms
  long double sum = 0.0L, term = 1.0L;
  for (int k = 0; k < 10000; ++k) {
    sum += term;
    term *= (1.0L + k) * (1.5L + k) * (2.0L + k) /
            ((1.5L + k) * (1.5L + k) * (1.0L + k)) * 0.3L;
  }
  CHECK(rel_err(got, static_cast<double>(sum)) < 1e-12);
}

TEST_CASE("hyp_pfq: reduces to hyp2f1 at m=2,n=1 (100 random points)") {
  std::uint64_t s = 42;
  auto next01 = [&s]() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return (s >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 100; ++i) {
    const double a = -2.0 + 5.0 * next01();
    const double b = 0.2 + 3.0 * next01();
    const double c = 0.6 + 2.5 * next01();
    const double x = -0.85 + 1.7 * next01();
    const double via_pfq = hyp_pfq({{a, b}, {c}, x});
    const double via_2f1 = hyp2f1(a, b, c, x);
    CHECK(std::abs(via_pfq - via_2f1) <=
          1e-13 * std::max(1.0, std::abs(via_2f1)));
  }
}

TEST_CASE("hyp2f1: Gauss contiguous relation on random points") {
  // c(1-x) F(a,b;c;x) - c F(a-1,b;c;x) + (c-b) x F(a,b;c+1;x) = 0
  std::uint64_t s = 2024;
  auto next01 = [&s]() {
    s ^= s << 13; s ^= s >> 7; s ^= s << 17;
    return (s >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 50; ++i) {
    const double a = 0.2 + 2.0 * next01();
    const double b = 0.2 + 2.0 * next01();
    const double c = 0.7 + 2.0 * next01();
    const double x = -0.8 + 1.6 * next01();
    const double lhs = c * (1.0 - x) * hyp2f1(a, b, c, x) -
                       c * hyp2f1(a - 1.0, b, c, x) +
                       (c - b) * x * hyp2f1(a, b, c + 1.0, x);
    CHECK(std::abs(lhs) < 1e-11 * (std::abs(c) + std::abs((c - b) * x) + 1.0) *
                              std::abs(hyp2f1(a, b, c, x)));
  }
}

TEST_CASE("hyp_pfq: slow-convergence guard raises rather than truncating") {
  SeriesConfig small;
  small.max_terms = 1000;
  // x extremely close to 1 cannot certify its tail within 1000 terms
  CHECK_THROWS_AS(
      hyp_pfq({{1.0, 1.5, 2.0}, {1.5, 1.5}, 1.0 - 1e-9}, small),
      NonConvergenceError);
}
