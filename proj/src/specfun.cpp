#include "alpharm/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "alpharm/errors.hpp"

namespace alpharm {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kSqrt2Pi = 2.50662827463100050241576528481104525;

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's set).
constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

double gamma_positive(double x) {
  // valid for x >= 0.5
  const double z = x - 1.0;
  double s = kLanczos[0];
  for (int i = 1; i < 9; ++i) s += kLanczos[i] / (z + i);
  const double t = z + 7.5;
  return kSqrt2Pi * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

}  // namespace

double sin_pi(double x) {
  const double n = std::round(x);
  const double f = x - n;  // exact for |x| within integer-spacing range
  const double s = std::sin(kPi * f);
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

double gamma(double x) {
  if (is_nonpositive_integer(x))
    throw DomainError("gamma: pole at nonpositive integer x=" + std::to_string(x));
  if (x < 0.5) return kPi / (sin_pi(x) * gamma_positive(1.0 - x));
  return gamma_positive(x);
}

double pochhammer(double y, int k) {
  if (k < 0) throw DomainError("pochhammer: k must be nonnegative");
  double prod = 1.0;
  for (int j = 0; j < k; ++j) prod *= y + j;
  return prod;
}

double binom_real(double a, int k) {
  if (k < 0) throw DomainError("binom_real: k must be nonnegative");
  double prod = 1.0;
  for (int j = 1; j <= k; ++j) prod *= (a - (j - 1)) / j;
  return prod;
}

namespace {

// Shared series driver. ratio(k) must return term_{k+1}/term_k. Stops once
// three consecutive terms are below tolerance with a geometric tail bound
// certified; raises NonConvergenceError when the budget runs out first.
template <class Ratio>
double sum_series(Ratio ratio, long terminate_at, const SeriesConfig& cfg,
                  const char* who) {
  const double rel = std::max(cfg.rel_tol, 1e-15);
  double sum = 1.0, term = 1.0;
  int quiet = 0;
  for (std::size_t k = 0; k < cfg.max_terms; ++k) {
    if (terminate_at >= 0 && static_cast<long>(k) >= terminate_at) return sum;
    const double rho = ratio(static_cast<int>(k));
    term *= rho;
    sum += term;
    const double arho = std::abs(rho);
    const double tmag = std::abs(term);
    const bool tail_ok =
        arho < 1.0 && tmag * arho / (1.0 - arho) <= rel * std::abs(sum);
    if (tmag <= rel * std::abs(sum) && tail_ok) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw NonConvergenceError(std::string(who) +
                            ": term budget exhausted before the tail bound was met");
}

}  // namespace

double hyp2f1(double a, double b, double c, double x, const SeriesConfig& cfg) {
  if (is_nonpositive_integer(c))
    throw DomainError("hyp2f1: lower parameter c is a nonpositive integer");
  if (x == 0.0 || a == 0.0 || b == 0.0) return 1.0;

  // series terminates when a or b is a nonpositive integer
  long terminate_at = -1;
  if (is_nonpositive_integer(a)) terminate_at = static_cast<long>(-a) + 1;
  if (is_nonpositive_integer(b)) {
    const long tb = static_cast<long>(-b) + 1;
    terminate_at = terminate_at < 0 ? tb : std::min(terminate_at, tb);
  }

  if (std::abs(x) >= 1.0 && terminate_at < 0) {
    if (x == 1.0 && c - a - b > 0.0) {
      // Gauss summation at the convergent endpoint
      return gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
    }
    throw DomainError("hyp2f1: x outside |x|<1 (x=1 needs c-a-b>0)");
  }

  auto ratio = [&](int k) {
    return (a + k) * (b + k) * x / ((c + k) * (k + 1.0));
  };
  return sum_series(ratio, terminate_at, cfg, "hyp2f1");
}

double hyp_pfq(const HypArg& arg, const SeriesConfig& cfg) {
  for (double bl : arg.lower)
    if (is_nonpositive_integer(bl))
      throw DomainError("hyp_pfq: lower parameter is a nonpositive integer");

  long terminate_at = -1;
  for (double au : arg.upper) {
    if (au == 0.0) return 1.0;
    if (is_nonpositive_integer(au)) {
      const long t = static_cast<long>(-au) + 1;
      terminate_at = terminate_at < 0 ? t : std::min(terminate_at, t);
    }
  }
  const double x = arg.x;
  if (x == 0.0) return 1.0;
  if (std::abs(x) >= 1.0 && terminate_at < 0) {
    double balance = 0.0;
    for (double bl : arg.lower) balance += bl;
    for (double au : arg.upper) balance -= au;
    if (std::abs(x) > 1.0 || balance <= 0.0)
      throw DomainError("hyp_pfq: |x|<1 required (|x|=1 needs sum(lower) > sum(upper))");
  }

  auto ratio = [&](int k) {
    double r = x / (k + 1.0);
    for (double au : arg.upper) r *= au + k;
    for (double bl : arg.lower) r /= bl + k;
    return r;
  };
  return sum_series(ratio, terminate_at, cfg, "hyp_pfq");
}

}  // namespace alpharm
