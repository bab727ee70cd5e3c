// Compares the serial reference sweeps against the OpenMP sweeps on the two
// heaviest verification kernels and prints a timing table.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tamari/bialg.hpp"
#include "tamari/intrel.hpp"
#include "tamari/order.hpp"

using namespace tamari;

namespace {

template <class F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool agree) {
  std::printf("%-34s %10.1f %10.1f %8.2fx   %s\n", name.c_str(), serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, agree ? "match" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available; both columns run the serial path\n");
#endif
  std::printf("%-34s %10s %10s %9s\n", "sweep", "serial/ms", "openmp/ms", "speedup");

  {
    // Warm the poset and Moebius-table caches outside the timed region.
    for (int n = 1; n <= 8; ++n) tamari_poset(n);
    verify_moebius(8, Exec::serial);
    Report rs, rp;
    double ts = time_ms([&] { rs = verify_moebius(8, Exec::serial); });
    double tp = time_ms([&] { rp = verify_moebius(8, Exec::parallel); });
    row("moebius-basis n<=8", ts, tp, rs.pass() == rp.pass() && rs.checks.size() == rp.checks.size());
  }
  {
    Report rs, rp;
    double ts = time_ms([&] { rs = verify_as(8, Exec::serial); });
    double tp = time_ms([&] { rp = verify_as(8, Exec::parallel); });
    row("as-formula n<=8", ts, tp, rs.pass() == rp.pass() && rs.checks.size() == rp.checks.size());
  }
  {
    Report rs, rp;
    double ts = time_ms([&] { rs = verify_coalgebra(7, 4, Exec::serial); });
    double tp = time_ms([&] { rp = verify_coalgebra(7, 4, Exec::parallel); });
    row("coalgebra-laws n<=7", ts, tp, rs.pass() == rp.pass() && rs.checks.size() == rp.checks.size());
  }
  {
    Report rs, rp;
    double ts = time_ms([&] { rs = verify_rel_operators(500, Exec::serial); });
    double tp = time_ms([&] { rp = verify_rel_operators(500, Exec::parallel); });
    row("relation-operators", ts, tp, rs.pass() == rp.pass() && rs.checks.size() == rp.checks.size());
  }
  return 0;
}
