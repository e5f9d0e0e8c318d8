#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "alpharm/oracle.hpp"
#include "alpharm/parallel.hpp"

using namespace alpharm;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

TEST_CASE("worker_threads is at least one") {
  CHECK(worker_threads() >= 1);
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (ExecMode mode : {ExecMode::Serial, ExecMode::OpenMP}) {
    std::vector<int> hits(1001, 0);
    parallel_for(1001, mode, [&](int i) { hits[i] += 1; });
    for (int h : hits) CHECK(h == 1);
  }
}

TEST_CASE("parallel_for propagates exceptions") {
  CHECK_THROWS_AS(
      parallel_for(64, ExecMode::OpenMP,
                   [](int i) { if (i == 13) throw std::runtime_error("boom"); }),
      std::runtime_error);
}

TEST_CASE("serial reference and OpenMP scans agree bitwise") {
  const QuadratureConfig quad;

  const auto marte_s =
      lemma_marte_scan(2.0, 0.7, 3.0, GridSpec(0.0, kPi, 17), quad, ExecMode::Serial);
  const auto marte_p =
      lemma_marte_scan(2.0, 0.7, 3.0, GridSpec(0.0, kPi, 17), quad, ExecMode::OpenMP);
  CHECK(marte_s.max_value == marte_p.max_value);
  CHECK(marte_s.argmax[0] == marte_p.argmax[0]);
  CHECK(marte_s.claim_holds == marte_p.claim_holds);

  const auto conj_s = conjecture_scan(2.0, GridSpec(0.2, 0.8, 4),
                                      GridSpec(0.0, 0.5 * kPi, 13), quad,
                                      ExecMode::Serial);
  const auto conj_p = conjecture_scan(2.0, GridSpec(0.2, 0.8, 4),
                                      GridSpec(0.0, 0.5 * kPi, 13), quad,
                                      ExecMode::OpenMP);
  CHECK(conj_s.max_value == conj_p.max_value);
  REQUIRE(conj_s.details.size() == conj_p.details.size());
  for (std::size_t i = 0; i < conj_s.details.size(); ++i) {
    CHECK(conj_s.details[i][1] == conj_p.details[i][1]);
    CHECK(conj_s.details[i][2] == conj_p.details[i][2]);
  }

  const auto bele_s = lemma_bele_scan(2.0, 2.0, GridSpec(0.0, 1.0, 5),
                                      GridSpec(0.0, kPi, 9), quad, ExecMode::Serial);
  const auto bele_p = lemma_bele_scan(2.0, 2.0, GridSpec(0.0, 1.0, 5),
                                      GridSpec(0.0, kPi, 9), quad, ExecMode::OpenMP);
  CHECK(bele_s.max_value == bele_p.max_value);
  CHECK(bele_s.argmax == bele_p.argmax);
}
