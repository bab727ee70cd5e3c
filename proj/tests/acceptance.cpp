// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Every expected value is pinned here; runtime budgets are asserted too.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "tamari/bialg.hpp"
#include "tamari/colored.hpp"
#include "tamari/intrel.hpp"
#include "tamari/order.hpp"

using namespace tamari;

namespace {

int failures = 0;

void line(int idx, const std::string& name, bool ok, double ms, double budget_ms,
          const std::string& detail = {}) {
  bool in_budget = ms < budget_ms;
  bool pass = ok && in_budget;
  if (!pass) ++failures;
  std::printf("[%s] criterion %d: %s (%.0f ms / budget %.0f ms)%s%s\n",
              pass ? "PASS" : "FAIL", idx, name.c_str(), ms, budget_ms,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

template <class F>
std::pair<bool, double> timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = f();
  auto t1 = std::chrono::steady_clock::now();
  return {ok, std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

std::string first_failure(const Report& r) {
  for (const Check& c : r.checks)
    if (!c.pass) return c.name + (c.counterexample.empty() ? "" : ": " + c.counterexample);
  return {};
}

}  // namespace

int main() {
  std::string detail;

  // 1. Moebius-basis equivalence for every tree with at most 8 leaves.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_moebius(8);
      detail = first_failure(r);
      return r.pass();
    });
    line(1, "Moebius basis: recursive = interval sum, n <= 8 (626 trees)", ok, ms, 60000,
         detail);
  }

  // 2. Coproduct of every Moebius element equals its splitting sum.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_as(8);
      detail = first_failure(r);
      return r.pass();
    });
    line(2, "coproduct of Moebius elements = two-factor splitting sum, n <= 8", ok, ms,
         120000, detail);
  }

  // 3. Coalgebra laws.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_coalgebra(7, 4);
      detail = first_failure(r);
      return r.pass();
    });
    line(3, "coassociativity (n <= 7), unital infinitesimal + coderivation laws", ok, ms,
         60000, detail);
  }

  // 4. Primitive dimensions and the cotensor identity.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_prim_dims(6, 8);
      detail = first_failure(r);
      bool dims_ok = true;
      const int expect[7] = {0, 1, 0, 1, 2, 6, 18};
      for (int n = 1; n <= 6; ++n) dims_ok = dims_ok && prim_dim(n) == expect[n];
      if (!dims_ok) detail = "kernel dimensions differ from 1,0,1,2,6,18";
      return r.pass() && dims_ok;
    });
    line(4, "primitive dims = 1,0,1,2,6,18 (n <= 6); cotensor identity n <= 8", ok, ms,
         60000, detail);
  }

  // 5. Colored structure over two colors.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_colored(5, 2, 1);
      detail = first_failure(r);
      bool dims_ok = true;
      const int expect[6] = {0, 1, 1, 5, 25, 141};
      for (int n = 1; n <= 5; ++n) dims_ok = dims_ok && colored_prim_dim(n, 2) == expect[n];
      if (!dims_ok) detail = "colored kernel dimensions differ from 1,1,5,25,141";
      return r.pass() && dims_ok;
    });
    line(5, "colored dims = 1,1,5,25,141 and span(generators) = kernel, n <= 5", ok, ms,
         180000, detail);
  }

  // 6. Operator calculus.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_operators(2, 1);
      detail = first_failure(r);
      return r.pass();
    });
    line(6, "operator calculus: comb expansion, hat expansion, compositions, spans", ok, ms,
         120000, detail);
  }

  // 7. Integer relations.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_intrel(4);
      detail = first_failure(r);
      return r.pass();
    });
    line(7, "integer relations: counts, associativity, laws, Hopf, generation", ok, ms,
         120000, detail);
  }

  // 8. The xi basis of primitives.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_xi(100, false);
      detail = first_failure(r);
      return r.pass();
    });
    line(8, "xi images: primitive, unitriangular, a basis (1, 3, 57; sampled n = 4)", ok,
         ms, 120000, detail);
  }

  // 9. Order layer.
  {
    auto [ok, ms] = timed([&] {
      Report r = verify_order(7, 7);
      detail = first_failure(r);
      return r.pass();
    });
    line(9, "order layer: lattices, surjection fibers, Moebius support", ok, ms, 60000,
         detail);
  }

  std::printf(failures == 0 ? "ACCEPTANCE: all criteria pass\n"
                            : "ACCEPTANCE: %d criteria FAILED\n",
              failures);
  return failures == 0 ? 0 : 1;
}
