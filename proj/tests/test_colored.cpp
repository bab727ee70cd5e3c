#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tamari/bialg.hpp"
#include "tamari/colored.hpp"
#include "tamari/jsonio.hpp"

using namespace tamari;

namespace {
const int A = 0, B = 1;  // colors; B is the basepoint in these tests
const ColoredTree LF;    // the colored leaf
ColoredTree Y(int s) { return cwedge(LF, s, LF); }
}  // namespace

TEST_CASE("colored constructors and products") {
  CHECK(Y(A).shape == wedge(Tree::leaf(), Tree::leaf()));
  CHECK(Y(A).colors == std::vector<int>{A});
  CHECK_THROWS_AS(ColoredTree(wedge(Tree::leaf(), Tree::leaf()), {A, B}),
                  std::invalid_argument);

  ColoredTree t = cwedge(Y(A), B, LF);
  CHECK(t.colors == std::vector<int>{A, B});
  ColoredTree u = cunder(Y(A), B, Y(A));
  CHECK(u.shape == under(Y(A).shape, Y(A).shape));
  CHECK(u.colors == std::vector<int>{A, B, A});
}

TEST_CASE("colored grafting splices color words in node order") {
  // grafting two colored combs into a colored 2-leaf host
  ColoredTree host = Y(B);
  std::vector<ColoredTree> args{Y(A), Y(A)};
  ColoredTree g = cgraft_all(host, args);
  CHECK(g.shape == graft_all(host.shape, std::vector<Tree>{args[0].shape, args[1].shape}));
  CHECK(g.colors == std::vector<int>{A, B, A});
  CHECK_THROWS_AS(cgraft_all(host, std::vector<ColoredTree>{Y(A)}), std::invalid_argument);
}

TEST_CASE("colored coproduct base cases") {
  CSplitPair leaf = ccoprod(ctree_elem(LF));
  CSplitPair wantl;
  wantl.add({std::nullopt, CTreeOrUnit(LF)}, 1);
  wantl.add({CTreeOrUnit(LF), std::nullopt}, 1);
  CHECK(leaf == wantl);

  CSplitPair dy = ccoprod(ctree_elem(Y(A)));
  CSplitPair want;
  want.add({std::nullopt, CTreeOrUnit(Y(A))}, 1);
  want.add({CTreeOrUnit(LF), CTreeOrUnit(LF)}, 1);
  want.add({CTreeOrUnit(Y(A)), std::nullopt}, 1);
  CHECK(dy == want);
}

TEST_CASE("hat wedge") {
  CTreeElem leaf = ctree_elem(LF);
  CTreeElem h = hat_wedge(leaf, A, B, leaf);
  CHECK(h == ctree_elem(Y(A)) - ctree_elem(Y(B)));
  CHECK(is_primitive(h));
  CHECK_THROWS_AS(hat_wedge(leaf, B, B, leaf), std::invalid_argument);

  // bilinearity on random combinations
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> coef(-2, 2), pick(0, 1);
  std::vector<ColoredTree> basis{LF};
  for (int it = 0; it < 30; ++it) {
    CTreeElem x1 = Int(coef(rng)) * ctree_elem(LF);
    CTreeElem x2 = Int(coef(rng)) * ctree_elem(Y(pick(rng)));
    CTreeElem y = Int(coef(rng)) * ctree_elem(Y(pick(rng)));
    CHECK(hat_wedge(x1 + x2, A, B, y) ==
          hat_wedge(x1, A, B, y) + hat_wedge(x2, A, B, y));
  }
}

TEST_CASE("generating family") {
  auto i1 = gen_In(1, 2, B);
  REQUIRE(i1.size() == 1);
  CHECK(i1[0] == ctree_elem(LF));

  auto i2 = gen_In(2, 2, B);
  REQUIRE(i2.size() == 1);
  CHECK(i2[0] == ctree_elem(Y(A)) - ctree_elem(Y(B)));

  for (int n = 1; n <= 4; ++n)
    for (const CTreeElem& g : gen_In(n, 2, B)) CHECK(is_primitive(g));
}

TEST_CASE("colored primitive dimensions") {
  // one color: the uncolored sequence
  std::vector<Int> totals1;
  for (int n = 1; n <= 5; ++n) totals1.push_back(oracles::catalan(n - 1));
  std::vector<Int> expect1 = oracles::monoid_inversion(totals1);
  for (int n = 1; n <= 5; ++n) CHECK(Int(colored_prim_dim(n, 1)) == expect1[n - 1]);

  // two colors: inversion of 2^(n-1) Catalan(n-1)
  std::vector<Int> totals2;
  for (int n = 1; n <= 4; ++n) totals2.push_back((Int(1) << (n - 1)) * oracles::catalan(n - 1));
  std::vector<Int> expect2 = oracles::monoid_inversion(totals2);
  CHECK(expect2 == std::vector<Int>{1, 1, 5, 25});
  for (int n = 1; n <= 4; ++n) CHECK(Int(colored_prim_dim(n, 2)) == expect2[n - 1]);
  CHECK(colored_prim_dim(2, 2) == 1);
}

TEST_CASE("operator action") {
  FreeMagmatic alg;
  CTreeElem leaf = ctree_elem(LF);

  // binary action is the colored product
  std::vector<CTreeElem> two{leaf, leaf};
  CHECK(act(make_operator(ctree_elem(Y(A))), two, alg) == ctree_elem(Y(A)));

  // unary identity
  std::vector<CTreeElem> one{ctree_elem(Y(B))};
  CHECK(act(make_operator(leaf), one, alg) == ctree_elem(Y(B)));

  // self-action closure: acting on generators reproduces the element
  for (int n = 1; n <= 4; ++n)
    for (const CTreeElem& g : gen_In(n, 2, B)) {
      std::vector<CTreeElem> args(n, leaf);
      CHECK(act(g, args, alg) == g);
    }

  std::vector<CTreeElem> wrong(3, leaf);
  CHECK_THROWS_AS(act(make_operator(ctree_elem(Y(A))), wrong, alg), std::invalid_argument);
}

TEST_CASE("moebius operators") {
  Tree r3 = comb_right(3);
  std::vector<int> ab{A, B};
  Operator m = m_op(r3, ab);
  CHECK(m.arity == 3);
  CTreeElem want = ctree_elem(ColoredTree(r3, ab)) - ctree_elem(ColoredTree(comb_left(3), ab));
  CHECK(m.elem == want);

  FreeMagmatic alg;
  std::vector<CTreeElem> two{ctree_elem(LF), ctree_elem(LF)};
  CHECK(act(mhat_op(A, B), two, alg) == ctree_elem(Y(A)) - ctree_elem(Y(B)));
  CHECK_THROWS_AS(mhat_op(B, B), std::invalid_argument);
}

TEST_CASE("primitive operators preserve primitives") {
  FreeMagmatic alg;
  // a primitive binary operator applied to primitive arguments
  std::vector<CTreeElem> args{hat_wedge(ctree_elem(LF), A, B, ctree_elem(LF)),
                              ctree_elem(LF)};
  CTreeElem out = act(mhat_op(A, B), args, alg);
  CHECK(is_primitive(out));
  // and a ternary Moebius operator
  std::vector<int> w{A, A};
  std::vector<CTreeElem> three{ctree_elem(LF), args[0], ctree_elem(LF)};
  CHECK(is_primitive(act(m_op(comb_right(3), w), three, alg)));
}

TEST_CASE("hat expansion with three colors") {
  // the expansion identity over a palette with two non-basepoint colors
  const int bp = 2;
  for (const Tree& t : enumerate_trees(3)) {
    for (int c1 = 0; c1 < 2; ++c1)
      for (int c2 = 0; c2 < 2; ++c2) {
        std::vector<int> w{c1, c2};
        CTreeElem lhs = colored_moebius(t, w);
        CTreeElem rhs;
        for (int mask = 0; mask < 4; ++mask) {
          std::vector<ColorComb> slots(2);
          for (int i = 0; i < 2; ++i)
            slots[i] = (mask & (1 << i)) ? ColorComb{{bp, 1}}
                                         : ColorComb{{w[i], 1}, {bp, -1}};
          rhs += colored_moebius_multi(t, slots);
        }
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("json forms") {
  CHECK(tree_json(comb_left(3)) == nlohmann::json{{"dyck", "1010"}});
  CHECK(tree_from_json(tree_json(comb_right(4))) == comb_right(4));
  std::vector<std::string> names{"a", "b"};
  nlohmann::json j = colored_json(cwedge(Y(A), B, LF), names);
  CHECK(j.at("colors") == nlohmann::json::array({"a", "b"}));
  CHECK(Tree::from_dyck(j.at("dyck").get<std::string>()) == comb_left(3));
}

TEST_CASE("colored verification sweeps") {
  Report laws = verify_colored_laws(4, 2, Exec::serial);
  for (const Check& c : laws.checks) {
    INFO(c.name, " ", c.counterexample);
    CHECK(c.pass);
  }
  Report st = verify_colored(4, 2, B, Exec::serial);
  for (const Check& c : st.checks) {
    INFO(c.name, " ", c.counterexample);
    CHECK(c.pass);
  }
}
