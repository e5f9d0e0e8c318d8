// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Grids and tolerances are pinned here and in the verify checks; nothing is
// calibrated at run time.

#include <cstdio>
#include <string>
#include <vector>

#include "alpharm/verify.hpp"

namespace {

using alpharm::verify::CheckResult;
using alpharm::verify::Options;

struct Criterion {
  int number;
  std::string title;
  std::vector<CheckResult> parts;

  bool pass() const {
    for (const auto& p : parts)
      if (!p.pass) return false;
    return true;
  }
};

void print(const Criterion& c) {
  // headline = worst part by deviation/tolerance ratio
  const CheckResult* worst = &c.parts.front();
  double worst_ratio = -1.0;
  for (const auto& p : c.parts) {
    const double ratio = p.tolerance > 0 ? p.max_dev / p.tolerance : p.max_dev;
    if (!p.pass) {
      worst = &p;
      break;
    }
    if (ratio > worst_ratio) {
      worst_ratio = ratio;
      worst = &p;
    }
  }
  std::printf("[%s] criterion %2d  %-38s max_dev=%.3e tol=%.1e (%s)\n",
              c.pass() ? "PASS" : "FAIL", c.number, c.title.c_str(),
              worst->max_dev, worst->tolerance, worst->name.c_str());
  std::fflush(stdout);
}

}  // namespace

int main() {
  const Options opt;  // default seed 12345, default tolerances, OpenMP

  std::vector<Criterion> criteria;
  criteria.push_back({1, "kernel normalization",
                      {alpharm::verify::kernel_normalization(opt),
                       alpharm::verify::boundary_limit(opt)}});
  criteria.push_back({2, "pointwise closed form vs q-norm oracle",
                      {alpharm::verify::qnorm_bfunc(opt)}});
  criteria.push_back({3, "pointwise sharpness (Hoelder extremal)",
                      {alpharm::verify::holder_sharpness(opt)}});
  criteria.push_back({4, "b constant = max of B = B(1)",
                      {alpharm::verify::bconst_max(opt)}});
  criteria.push_back({5, "classical reductions at alpha=0",
                      {alpharm::verify::classical_alpha0(opt)}});
  criteria.push_back({6, "origin gradient sharpness",
                      {alpharm::verify::origin_sharpness(opt)}});
  criteria.push_back({7, "lemma max-location scans",
                      {alpharm::verify::lemma_marte(opt),
                       alpharm::verify::lemma_bele(opt)}});
  criteria.push_back({8, "Schwarz majorant suite",
                      {alpharm::verify::schwarz_identity(opt),
                       alpharm::verify::schwarz_extremal(opt),
                       alpharm::verify::schwarz_random(opt)}});
  criteria.push_back({9, "proven gradient-conjecture cases",
                      {alpharm::verify::phi_prime(opt),
                       alpharm::verify::conjecture_proven(opt),
                       alpharm::verify::grad_closed_forms(opt)}});
  criteria.push_back({10, "gradient-bound validity on random data",
                      {alpharm::verify::deriv_bound(opt)}});

  bool all = true;
  for (const auto& c : criteria) {
    print(c);
    all = all && c.pass();
  }
  std::printf("%s\n", all ? "acceptance: all criteria pass" : "acceptance: FAILURES");
  return all ? 0 : 1;
}
