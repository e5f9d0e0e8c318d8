// Compares the serial reference path against the OpenMP path on the scan
// workloads and checks that both produce identical results.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "alpharm/oracle.hpp"
#include "alpharm/parallel.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Timing {
  double serial;
  double parallel;
  bool identical;
};

template <class Fn>
Timing time_both(Fn&& run) {
  const auto t0 = Clock::now();
  const auto serial_result = run(alpharm::ExecMode::Serial);
  const double ts = seconds_since(t0);
  const auto t1 = Clock::now();
  const auto parallel_result = run(alpharm::ExecMode::OpenMP);
  const double tp = seconds_since(t1);
  const bool same = serial_result.max_value == parallel_result.max_value &&
                    serial_result.argmax == parallel_result.argmax &&
                    serial_result.claim_holds == parallel_result.claim_holds;
  return {ts, tp, same};
}

void report(const char* name, const Timing& t) {
  std::printf("%-22s serial %8.3fs   openmp %8.3fs   speedup %.2fx   %s\n", name,
              t.serial, t.parallel, t.serial / t.parallel,
              t.identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  const alpharm::QuadratureConfig quad;
  std::printf("workers: %d\n", alpharm::worker_threads());

  bool all_same = true;

  {
    const auto t = time_both([&](alpharm::ExecMode mode) {
      return alpharm::conjecture_scan(2.0, alpharm::GridSpec(0.05, 0.95, 61),
                                      alpharm::GridSpec(0.0, 0.5 * kPi, 241), quad, mode);
    });
    report("conjecture_scan a=2", t);
    all_same = all_same && t.identical;
  }
  {
    const auto t = time_both([&](alpharm::ExecMode mode) {
      return alpharm::lemma_marte_scan(2.5, 0.98, 6.5,
                                       alpharm::GridSpec(0.0, kPi, 2001), quad, mode);
    });
    report("lemma_marte_scan", t);
    all_same = all_same && t.identical;
  }
  {
    const auto t = time_both([&](alpharm::ExecMode mode) {
      return alpharm::lemma_bele_scan(2.0, 3.0, alpharm::GridSpec(0.0, 1.0, 51),
                                      alpharm::GridSpec(0.0, kPi, 101), quad, mode);
    });
    report("lemma_bele_scan", t);
    all_same = all_same && t.identical;
  }

  return all_same ? 0 : 1;
}
