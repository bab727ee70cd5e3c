#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tamari/errors.hpp"
#include "tamari/intrel.hpp"

using namespace tamari;

namespace {
const IntRel ONE = rel_one();
IntRel rel(int n, std::vector<std::pair<int, int>> arcs) { return IntRel(n, std::move(arcs)); }
}  // namespace

TEST_CASE("relation basics") {
  CHECK_THROWS_AS(rel(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(rel(2, {{0, 1}}), std::invalid_argument);
  CHECK(rel(2, {{1, 2}, {1, 2}}).arcs.size() == 1);  // duplicates collapse
  CHECK(enumerate_rels(3).size() == 64);
  CHECK(enumerate_rels(4).size() == 4096);
  CHECK_THROWS_AS(enumerate_rels(6), resource_limit_error);
}

TEST_CASE("restriction") {
  IntRel r = rel(3, {{1, 3}, {3, 2}});
  std::vector<int> all{1, 2, 3};
  CHECK(restrict_rel(r, all) == r);
  CHECK(restrict_rel(r, std::vector<int>{}) == IntRel());
  CHECK(restrict_rel(r, std::vector<int>{1, 3}) == rel(2, {{1, 2}}));
  CHECK(restrict_rel(r, std::vector<int>{2, 3}) == rel(2, {{2, 1}}));
  CHECK_THROWS_AS(restrict_rel(r, std::vector<int>{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(restrict_rel(r, std::vector<int>{4}), std::invalid_argument);
}

TEST_CASE("block products") {
  IntRel uu = prod_basic(ONE, ONE, RelOp::sq);
  IntRel got = prod_basic(uu, uu, RelOp::down);
  CHECK(got == rel(4, {{3, 1}, {3, 2}, {4, 1}, {4, 2}}));
  CHECK(prod_basic(ONE, ONE, RelOp::updown) == rel(2, {{1, 2}, {2, 1}}));
  CHECK(prod_basic(ONE, ONE, RelOp::up) == rel(2, {{1, 2}}));
}

TEST_CASE("relation coproduct") {
  RelSplitPair d1 = coprod_rel(RelElem::single(ONE));
  RelSplitPair w1;
  w1.add({IntRel(), ONE}, 1);
  w1.add({ONE, IntRel()}, 1);
  CHECK(d1 == w1);

  IntRel uu = prod_basic(ONE, ONE, RelOp::sq);
  RelSplitPair d2 = coprod_rel(RelElem::single(uu));
  RelSplitPair w2;
  w2.add({IntRel(), uu}, 1);
  w2.add({ONE, ONE}, 1);
  w2.add({uu, IntRel()}, 1);
  CHECK(d2 == w2);

  // coassociativity over every size-3 relation
  for (const IntRel& r : enumerate_rels(3)) {
    LinComb<std::tuple<IntRel, IntRel, IntRel>> l, rr;
    for (const auto& [ab, c] : coprod_rel(RelElem::single(r)).terms()) {
      for (const auto& [uv, cc] : coprod_rel(RelElem::single(ab.first)).terms())
        l.add({uv.first, uv.second, ab.second}, c * cc);
      for (const auto& [uv, cc] : coprod_rel(RelElem::single(ab.second)).terms())
        rr.add({ab.first, uv.first, uv.second}, c * cc);
    }
    CHECK(l == rr);
  }
}

TEST_CASE("word products") {
  AlphaMap up1{RelOp::up};
  CHECK(prod_alpha(ONE, ONE, up1) == prod_basic(ONE, ONE, RelOp::up));
  CHECK_THROWS_AS(prod_alpha(ONE, ONE, AlphaMap{RelOp::sq}), std::invalid_argument);

  // size-2 left factor with one downward arc, word (up, sq, down), arcless
  // right factor of size 3: exactly the two cross arcs (2,3) and (5,2) appear
  IntRel p = rel(2, {{2, 1}});
  AlphaMap word{RelOp::up, RelOp::sq, RelOp::down};
  IntRel q0(3);
  CHECK(prod_alpha(p, q0, word) == rel(5, {{2, 1}, {2, 3}, {5, 2}}));
  // and with a nontrivial right factor the same arcs are added on top
  IntRel q = rel(3, {{2, 1}, {1, 3}});
  IntRel want = rel(5, {{2, 1}, {4, 3}, {3, 5}, {2, 3}, {5, 2}});
  CHECK(prod_alpha(p, q, word) == want);
  // the word is clipped at the size of the right factor
  CHECK(prod_alpha(p, ONE, word) == rel(3, {{2, 1}, {2, 3}}));
}

TEST_CASE("shuffle products") {
  RelElem s1 = shuffle_prod(ONE, ONE, RelOp::sq);
  CHECK(s1.size() == 1);
  CHECK(s1.coeff(prod_basic(ONE, ONE, RelOp::sq)) == 2);

  RelElem s2 = shuffle_prod(ONE, ONE, RelOp::up);
  CHECK(s2.size() == 2);
  CHECK(s2.coeff(rel(2, {{1, 2}})) == 1);
  CHECK(s2.coeff(rel(2, {{2, 1}})) == 1);

  // summand count is the binomial coefficient
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> pick(0, 63);
  const std::vector<IntRel> r3 = enumerate_rels(3);
  const std::vector<IntRel> r2 = enumerate_rels(2);
  for (int it = 0; it < 10; ++it) {
    const IntRel& a = r3[pick(rng)];
    const IntRel& b = r2[pick(rng) % r2.size()];
    Int total = 0;
    for (const auto& [k, c] : shuffle_prod(a, b, RelOp::up).terms()) total += c;
    CHECK(total == 10);  // binomial(5, 3)
  }
}

TEST_CASE("left factor") {
  IntRel uu = prod_basic(ONE, ONE, RelOp::sq);
  auto [a0, r0] = left_factor(uu);
  CHECK(a0.empty());
  CHECK(r0 == ONE);

  IntRel up = prod_basic(ONE, ONE, RelOp::up);
  auto [a1, r1] = left_factor(up);
  CHECK(a1 == AlphaMap{RelOp::up});
  CHECK(r1 == ONE);

  CHECK_THROWS_AS(left_factor(ONE), std::invalid_argument);

  // round trip over every relation of size at most 3
  for (int n = 2; n <= 3; ++n)
    for (const IntRel& r : enumerate_rels(n)) {
      auto [alpha, rest] = left_factor(r);
      CHECK(alpha_valid(alpha));
      CHECK(prod_alpha(ONE, rest, alpha) == r);
    }
}

TEST_CASE("disjoint-union factorization") {
  CHECK(sqcup_factor(ONE) == std::vector<IntRel>{ONE});
  CHECK(is_sqcup_irreducible(ONE));
  IntRel up = prod_basic(ONE, ONE, RelOp::up);
  CHECK(is_sqcup_irreducible(up));
  IntRel uu = prod_basic(ONE, ONE, RelOp::sq);
  CHECK_FALSE(is_sqcup_irreducible(uu));
  CHECK(sqcup_factor(prod_basic(up, ONE, RelOp::sq)) == std::vector<IntRel>{up, ONE});

  long c1 = 0, c2 = 0, c3 = 0;
  for (const IntRel& r : enumerate_rels(1)) c1 += is_sqcup_irreducible(r);
  for (const IntRel& r : enumerate_rels(2)) c2 += is_sqcup_irreducible(r);
  for (const IntRel& r : enumerate_rels(3)) c3 += is_sqcup_irreducible(r);
  CHECK(c1 == 1);
  CHECK(c2 == 3);
  CHECK(c3 == 57);
  // against the free-monoid inversion of the totals 1, 4, 64
  std::vector<Int> inv = oracles::monoid_inversion({Int(1), Int(4), Int(64)});
  CHECK(inv == std::vector<Int>{1, 3, 57});
}

TEST_CASE("xi base cases") {
  CHECK(xi(ONE) == RelElem::single(ONE));
  IntRel up = prod_basic(ONE, ONE, RelOp::up);
  IntRel uu = prod_basic(ONE, ONE, RelOp::sq);
  CHECK(xi(up) == RelElem::single(up) - RelElem::single(uu));
  CHECK_THROWS_AS(xi(uu), std::invalid_argument);
}

TEST_CASE("xi images are primitive and unitriangular") {
  for (int n = 1; n <= 3; ++n)
    for (const IntRel& r : enumerate_rels(n)) {
      if (!is_sqcup_irreducible(r)) continue;
      RelElem x = xi(r);
      CHECK(is_primitive(x));
      CHECK(x.coeff(r) == 1);
      for (const auto& [p, c] : x.terms()) {
        if (p == r) continue;
        CHECK(p.n == r.n);
        CHECK(p.arcs.size() < r.arcs.size());
        CHECK(std::includes(r.arcs.begin(), r.arcs.end(), p.arcs.begin(), p.arcs.end()));
      }
    }
}

TEST_CASE("comb operators on relation tuples") {
  // an instance where the interior word fits: vanishing
  RelAlgebra alg;
  AlphaMap up1{RelOp::up};
  // M over three factors with alpha_2 = (up), |R_2| = 1
  std::vector<int> colors{1, 2};
  alg.palette = {AlphaMap{}, up1, up1};
  CTreeElem op = colored_moebius(comb_right(3), colors);
  std::vector<RelElem> args{RelElem::single(ONE), RelElem::single(ONE),
                            RelElem::single(ONE)};
  CHECK(act(op, args, alg).is_zero());

  // an instance where it does not fit: leading term with coefficient 1
  AlphaMap upup{RelOp::up, RelOp::up};
  alg.palette = {AlphaMap{}, upup, up1};
  CTreeElem op2 = colored_moebius(comb_right(3), colors);
  RelElem v = act(op2, args, alg);
  IntRel lead = prod_alpha(ONE, prod_alpha(ONE, ONE, up1), upup);
  CHECK(v.coeff(lead) == 1);
  for (const auto& [p, c] : v.terms()) CHECK((c == 1 || c == -1));
}

TEST_CASE("json round trip") {
  IntRel r = rel(3, {{1, 3}, {3, 2}});
  nlohmann::json j = rel_json(r);
  CHECK(j.at("n") == 3);
  CHECK(rel_from_json(j) == r);
  CHECK(rel_from_json(nlohmann::json::parse(R"({"n":3,"arcs":[[1,3],[3,2]]})")) == r);
}

TEST_CASE("alpha words") {
  CHECK(alpha_valid(AlphaMap{}));
  CHECK_FALSE(alpha_valid(AlphaMap{RelOp::up, RelOp::sq}));
  CHECK(enumerate_alphas(3).size() == 1 + 3 + 12 + 48);
}

TEST_CASE("intrel verification sweeps") {
  Report r = verify_intrel(3, Exec::serial);
  for (const Check& c : r.checks) {
    INFO(c.name, " ", c.counterexample);
    CHECK(c.pass);
  }
  Report x = verify_xi(20, false, Exec::serial);
  for (const Check& c : x.checks) {
    INFO(c.name, " ", c.counterexample);
    CHECK(c.pass);
  }
}
