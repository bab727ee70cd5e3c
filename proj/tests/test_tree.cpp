#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "tamari/tree.hpp"

using namespace tamari;

namespace {
const Tree L = Tree::leaf();
Tree T(const char* s) { return Tree::parse(s); }
}  // namespace

TEST_CASE("enumeration order and counts") {
  CHECK(enumerate_trees(1) == std::vector<Tree>{L});
  // fixed order in degree 3: left comb first
  std::vector<Tree> d3 = enumerate_trees(3);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].paren() == "((| |) |)");
  CHECK(d3[1].paren() == "(| (| |))");
  for (int n = 1; n <= 10; ++n)
    CHECK(Int(enumerate_trees(n).size()) == oracles::catalan(n - 1));
  CHECK(enumerate_trees(8).size() == 429);
  CHECK_THROWS_AS(enumerate_trees(0), std::invalid_argument);
  // no duplicates, sorted by the Dyck key
  std::vector<Tree> d6 = enumerate_trees(6);
  CHECK(std::is_sorted(d6.begin(), d6.end()));
  CHECK(std::adjacent_find(d6.begin(), d6.end()) == d6.end());
}

TEST_CASE("codecs round-trip") {
  for (int n = 1; n <= 6; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      CHECK(Tree::parse(t.paren()) == t);
      CHECK(Tree::from_dyck(t.dyck()) == t);
      CHECK(static_cast<int>(t.dyck().size()) == 2 * (t.leaves() - 1));
    }
  CHECK(T("(|(||))") == T("(| (| |))"));  // whitespace-free input
  CHECK_THROWS_AS(Tree::parse("(|"), std::invalid_argument);
  CHECK_THROWS_AS(Tree::parse("(| |) |"), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_dyck("102"), std::invalid_argument);
  CHECK_THROWS_AS(Tree::from_dyck("11"), std::invalid_argument);
}

TEST_CASE("wedge") {
  CHECK(wedge(L, L).paren() == "(| |)");
  CHECK(wedge(T("(| |)"), L) == comb_left(3));
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; a + b <= 7; ++b)
      for (const Tree& t : enumerate_trees(a))
        for (const Tree& w : enumerate_trees(b))
          CHECK(wedge(t, w).leaves() == t.leaves() + w.leaves());
  // unique decomposition of any non-leaf
  for (int n = 2; n <= 6; ++n)
    for (const Tree& t : enumerate_trees(n)) CHECK(wedge(t.left(), t.right()) == t);
}

TEST_CASE("graft") {
  Tree y = T("(| |)");
  CHECK(graft(L, 1, y) == y);
  CHECK(graft(y, 1, y) == T("((| |) |)"));
  for (int n = 1; n <= 5; ++n)
    for (const Tree& t : enumerate_trees(n))
      for (int j = 1; j <= n; ++j) CHECK(graft(t, j, L) == t);
  CHECK_THROWS_AS(graft(y, 0, y), std::invalid_argument);
  CHECK_THROWS_AS(graft(y, 3, y), std::invalid_argument);
  CHECK(graft(y, 2, y).paren() == "(| (| |))");
}

TEST_CASE("graft_all") {
  Tree y = T("(| |)");
  for (int n = 1; n <= 4; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      std::vector<Tree> leaves(n, L);
      CHECK(graft_all(t, leaves) == t);
    }
  std::vector<Tree> pair = {T("(| (| |))"), y};
  CHECK(graft_all(y, pair) == wedge(pair[0], pair[1]));
  CHECK_THROWS_AS(graft_all(y, std::vector<Tree>{L}), std::invalid_argument);

  // simultaneous grafting equals the iterated grafts, in any order with
  // index bookkeeping
  for (int n = 1; n <= 3; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      std::vector<std::vector<Tree>> choices(n);
      std::vector<Tree> pickable;
      for (int d = 1; d <= 3; ++d)
        for (const Tree& u : enumerate_trees(d)) pickable.push_back(u);
      std::vector<std::size_t> idx(n, 0);
      while (true) {
        std::vector<Tree> ws;
        for (int i = 0; i < n; ++i) ws.push_back(pickable[idx[i]]);
        Tree simultaneous = graft_all(t, ws);
        // right-to-left iterated grafting: earlier positions undisturbed
        Tree rl = t;
        for (int j = n; j >= 1; --j) rl = graft(rl, j, ws[j - 1]);
        CHECK(simultaneous == rl);
        // left-to-right with shifted indices
        Tree lr = t;
        int shift = 0;
        for (int j = 1; j <= n; ++j) {
          lr = graft(lr, j + shift, ws[j - 1]);
          shift += ws[j - 1].leaves() - 1;
        }
        CHECK(simultaneous == lr);
        int k = n - 1;
        while (k >= 0 && idx[k] + 1 == pickable.size()) idx[k--] = 0;
        if (k < 0) break;
        ++idx[k];
      }
    }
}

TEST_CASE("under product") {
  CHECK(under(L, L).paren() == "(| |)");
  // unit laws through the optional form
  std::optional<Tree> unit;
  for (const Tree& t : enumerate_trees(4)) {
    CHECK(under(std::optional<Tree>(t), unit) == std::optional<Tree>(t));
    CHECK(under(unit, std::optional<Tree>(t)) == std::optional<Tree>(t));
  }
  // associativity, exhaustively on trees with at most 4 leaves
  std::vector<Tree> small;
  for (int n = 1; n <= 4; ++n)
    for (const Tree& t : enumerate_trees(n)) small.push_back(t);
  for (const Tree& a : small)
    for (const Tree& b : small)
      for (const Tree& c : small) CHECK(under(under(a, b), c) == under(a, under(b, c)));
  // wedge is not associative
  CHECK(wedge(wedge(L, L), L) != wedge(L, wedge(L, L)));
}

TEST_CASE("combs") {
  CHECK(comb_left(2) == comb_right(2));
  CHECK(comb_left(2).paren() == "(| |)");
  CHECK(comb_left(3).paren() == "((| |) |)");
  CHECK(comb_left(1) == L);
  CHECK(comb_right(1) == L);
  CHECK_THROWS_AS(comb_left(0), std::invalid_argument);
  CHECK_THROWS_AS(comb_right(0), std::invalid_argument);
  for (int n = 2; n <= 8; ++n) {
    std::optional<Tree> acc = L;
    for (int i = 2; i <= n; ++i) acc = under(acc, std::optional<Tree>(L));
    CHECK(*acc == comb_left(n));
    CHECK(comb_right(n) == wedge(L, comb_right(n - 1)));
  }
}

namespace {

// Brute-force irreducibility: no pair of trees multiplies to t.
bool brute_irreducible(const Tree& t) {
  const int n = t.leaves();
  for (int a = 1; a < n; ++a)
    for (const Tree& u : enumerate_trees(a))
      for (const Tree& w : enumerate_trees(n - a))
        if (under(u, w) == t) return false;
  return true;
}

// All factorizations into brute-force irreducibles; the claim under test is
// that there is exactly one.
std::vector<std::vector<Tree>> brute_factorizations(const Tree& t) {
  if (brute_irreducible(t)) return {{t}};
  std::vector<std::vector<Tree>> out;
  const int n = t.leaves();
  for (int a = 1; a < n; ++a)
    for (const Tree& u : enumerate_trees(a)) {
      if (!brute_irreducible(u)) continue;
      for (const Tree& w : enumerate_trees(n - a))
        if (under(u, w) == t)
          for (auto rest : brute_factorizations(w)) {
            rest.insert(rest.begin(), u);
            out.push_back(std::move(rest));
          }
    }
  return out;
}

}  // namespace

TEST_CASE("under-irreducibility and factorization") {
  CHECK(is_under_irreducible(L));
  CHECK_FALSE(is_under_irreducible(T("(| |)")));
  CHECK(is_under_irreducible(T("(| (| |))")));
  CHECK(factor_under(L) == std::vector<Tree>{L});
  CHECK(factor_under(T("((| |) |)")) == std::vector<Tree>{L, L, L});
  CHECK(factor_under(T("(| (| |))")) == std::vector<Tree>{T("(| (| |))")});

  // refactoring recovers the tree, for every tree with up to 8 leaves
  for (int n = 1; n <= 8; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      std::vector<Tree> f = factor_under(t);
      CHECK(*under_prod(f) == t);
      for (const Tree& u : f) CHECK(is_under_irreducible(u));
    }

  // unique factorization against the brute-force oracle
  for (int n = 1; n <= 6; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      CHECK(is_under_irreducible(t) == brute_irreducible(t));
      auto all = brute_factorizations(t);
      REQUIRE(all.size() == 1);
      CHECK(all[0] == factor_under(t));
    }

  // irreducible counts from the Catalan series inversion, where the series
  // inversion is I = C/(1+C), i.e. the monoid inversion of the totals
  std::vector<Int> totals;
  for (int n = 1; n <= 6; ++n) totals.push_back(oracles::catalan(n - 1));
  std::vector<Int> irr = oracles::monoid_inversion(totals);
  CHECK(irr == std::vector<Int>{1, 0, 1, 2, 6, 18});
  for (int n = 1; n <= 6; ++n) {
    long count = 0;
    for (const Tree& t : enumerate_trees(n)) count += is_under_irreducible(t);
    CHECK(Int(count) == irr[n - 1]);
  }
}

TEST_CASE("split_at") {
  for (int n = 1; n <= 6; ++n)
    for (const Tree& t : enumerate_trees(n)) {
      auto [a0, b0] = split_at(t, 0);
      CHECK_FALSE(a0.has_value());
      CHECK(*b0 == t);
      auto [an, bn] = split_at(t, n);
      CHECK(*an == t);
      CHECK_FALSE(bn.has_value());
      for (int i = 1; i < n; ++i) {
        auto [a, b] = split_at(t, i);
        CHECK(a->leaves() == i);
        CHECK(b->leaves() == n - i);
      }
      if (!t.is_leaf()) {
        auto [a, b] = split_at(t, t.left().leaves());
        CHECK(*a == t.left());
        CHECK(*b == t.right());
      }
    }
  CHECK_THROWS_AS(split_at(Tree::leaf(), 2), std::invalid_argument);
}
