#include "tamari/colored.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "tamari/bialg.hpp"
#include "tamari/linalg.hpp"

namespace tamari {

ColoredTree::ColoredTree(Tree s, std::vector<int> c) : shape(std::move(s)), colors(std::move(c)) {
  if (static_cast<int>(colors.size()) != shape.nodes())
    throw std::invalid_argument("ColoredTree: color word length must equal node count");
}

std::string ColoredTree::str(std::span<const std::string> names) const {
  std::string out = shape.paren();
  if (colors.empty()) return out;
  out += "@[";
  for (std::size_t i = 0; i < colors.size(); ++i) {
    if (i) out += ",";
    if (colors[i] >= 0 && colors[i] < static_cast<int>(names.size()))
      out += names[colors[i]];
    else
      out += std::to_string(colors[i]);
  }
  out += "]";
  return out;
}

ColoredTree cwedge(const ColoredTree& t, int s, const ColoredTree& w) {
  std::vector<int> colors = t.colors;
  colors.push_back(s);
  colors.insert(colors.end(), w.colors.begin(), w.colors.end());
  return ColoredTree(wedge(t.shape, w.shape), std::move(colors));
}

ColoredTree cunder(const ColoredTree& t, int s, const ColoredTree& w) {
  std::vector<int> colors = t.colors;
  colors.push_back(s);
  colors.insert(colors.end(), w.colors.begin(), w.colors.end());
  return ColoredTree(under(t.shape, w.shape), std::move(colors));
}

ColoredTree cgraft_all(const ColoredTree& t, std::span<const ColoredTree> ws) {
  const int r = t.leaves();
  if (static_cast<int>(ws.size()) != r)
    throw std::invalid_argument("cgraft_all: arity mismatch");
  std::vector<Tree> shapes;
  shapes.reserve(r);
  for (const ColoredTree& w : ws) shapes.push_back(w.shape);
  // Infix node order of the grafted tree interleaves the argument blocks
  // with the host colors, independent of the host shape.
  std::vector<int> colors(ws[0].colors);
  for (int j = 1; j < r; ++j) {
    colors.push_back(t.colors[j - 1]);
    colors.insert(colors.end(), ws[j].colors.begin(), ws[j].colors.end());
  }
  return ColoredTree(graft_all(t.shape, shapes), std::move(colors));
}

namespace {

template <class F>
CTreeElem bilinear(const CTreeElem& x, const CTreeElem& y, F&& f) {
  CTreeElem out;
  for (const auto& [a, ca] : x.terms()) {
    if (!a) throw std::invalid_argument("colored product: unit component");
    for (const auto& [b, cb] : y.terms()) {
      if (!b) throw std::invalid_argument("colored product: unit component");
      out.add(CTreeOrUnit(f(*a, *b)), ca * cb);
    }
  }
  return out;
}

}  // namespace

CTreeElem cwedge_elem(const CTreeElem& x, int s, const CTreeElem& y) {
  return bilinear(x, y, [&](const ColoredTree& a, const ColoredTree& b) {
    return cwedge(a, s, b);
  });
}

CTreeElem cunder_elem(const CTreeElem& x, int s, const CTreeElem& y) {
  return bilinear(x, y, [&](const ColoredTree& a, const ColoredTree& b) {
    return cunder(a, s, b);
  });
}

CTreeElem cgraft_all_elem(const CTreeElem& x0, std::span<const CTreeElem> xs) {
  CTreeElem out;
  for (const auto& [b0, c0] : x0.terms()) {
    if (!b0) throw std::invalid_argument("cgraft_all_elem: unit component in operator");
    if (b0->leaves() != static_cast<int>(xs.size()))
      throw std::invalid_argument("cgraft_all_elem: arity mismatch");
    std::vector<ColoredTree> pick(xs.size());
    auto expand = [&](auto&& self, std::size_t i, Int coeff) -> void {
      if (i == xs.size()) {
        out.add(CTreeOrUnit(cgraft_all(*b0, pick)), coeff);
        return;
      }
      for (const auto& [bi, ci] : xs[i].terms()) {
        if (!bi) throw std::invalid_argument("cgraft_all_elem: unit component in argument");
        pick[i] = *bi;
        self(self, i + 1, coeff * ci);
      }
    };
    expand(expand, 0, c0);
  }
  return out;
}

CSplitPair ccoprod(const CTreeElem& x) {
  CSplitPair out;
  for (const auto& [b, c] : x.terms()) {
    if (!b) {
      out.add({std::nullopt, std::nullopt}, c);
      continue;
    }
    const int n = b->leaves();
    for (int i = 0; i <= n; ++i) {
      auto [ls, rs] = split_at(b->shape, i);
      CTreeOrUnit left, right;
      if (ls) {
        std::vector<int> lc(b->colors.begin(), b->colors.begin() + (i - 1));
        left = ColoredTree(*ls, std::move(lc));
      }
      if (rs) {
        std::vector<int> rc(b->colors.begin() + std::min<int>(i, n - 1), b->colors.end());
        right = ColoredTree(*rs, std::move(rc));
      }
      out.add({std::move(left), std::move(right)}, c);
    }
  }
  return out;
}

CSplitPair ccoprod_red(const CTreeElem& x) {
  if (x.coeff(std::nullopt) != 0)
    throw std::invalid_argument("ccoprod_red: nonzero unit component");
  CSplitPair out = ccoprod(x);
  for (const auto& [b, c] : x.terms()) {
    out.add({std::nullopt, b}, -c);
    out.add({b, std::nullopt}, -c);
  }
  return out;
}

bool is_primitive(const CTreeElem& x) { return ccoprod_red(x).is_zero(); }

CTreeElem hat_wedge(const CTreeElem& x, int s, int bp, const CTreeElem& y) {
  if (s == bp) throw std::invalid_argument("hat_wedge: color equals the basepoint");
  return cwedge_elem(x, s, y) - cwedge_elem(x, bp, y);
}

CTreeElem colored_moebius(const Tree& t, std::span<const int> colors) {
  if (static_cast<int>(colors.size()) != t.nodes())
    throw std::invalid_argument("colored_moebius: color word length mismatch");
  std::vector<int> word(colors.begin(), colors.end());
  CTreeElem out;
  for (const auto& [b, c] : moebius_elem(t).terms())
    out.add(CTreeOrUnit(ColoredTree(*b, word)), c);
  return out;
}

CTreeElem colored_moebius_multi(const Tree& t, std::span<const ColorComb> slots) {
  if (static_cast<int>(slots.size()) != t.nodes())
    throw std::invalid_argument("colored_moebius_multi: slot count mismatch");
  CTreeElem out;
  std::vector<int> word(slots.size());
  auto expand = [&](auto&& self, std::size_t i, Int coeff) -> void {
    if (i == slots.size()) {
      CTreeElem term = colored_moebius(t, word);
      term *= coeff;
      out += term;
      return;
    }
    for (const auto& [color, c] : slots[i]) {
      word[i] = color;
      self(self, i + 1, coeff * c);
    }
  };
  expand(expand, 0, Int(1));
  return out;
}

std::vector<std::vector<int>> color_words(int length, int num_colors) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(length, 0);
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] == num_colors - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

std::vector<ColoredTree> enumerate_colored(int n, int num_colors) {
  std::vector<ColoredTree> out;
  for (const Tree& t : enumerate_trees(n))
    for (auto& w : color_words(n - 1, num_colors)) out.emplace_back(t, w);
  return out;
}

std::vector<CTreeElem> gen_In(int n, int num_colors, int bp) {
  if (n < 1) throw std::invalid_argument("gen_In: n must be positive");
  if (bp < 0 || bp >= num_colors) throw std::invalid_argument("gen_In: basepoint out of range");
  std::vector<std::vector<CTreeElem>> layer(n + 1);
  layer[1] = {ctree_elem(cleaf())};
  for (int m = 2; m <= n; ++m) {
    if (m == 2) {
      CTreeElem leaf = ctree_elem(cleaf());
      for (int s = 0; s < num_colors; ++s)
        if (s != bp) layer[2].push_back(hat_wedge(leaf, s, bp, leaf));
      continue;
    }
    for (const Tree& t : enumerate_trees(m))
      if (is_under_irreducible(t))
        for (auto& w : color_words(m - 1, num_colors))
          layer[m].push_back(colored_moebius(t, w));
    // Graftings of lower-degree members along lower-degree members.
    for (int r = 2; r < m; ++r) {
      std::vector<int> comp(r);
      auto comps = [&](auto&& self, int slot, int rest) -> void {
        if (slot == r) {
          if (rest != 0) return;
          std::vector<CTreeElem> args(r);
          auto pick = [&](auto&& inner, int i) -> void {
            if (i == r) {
              for (const CTreeElem& x : layer[r])
                layer[m].push_back(cgraft_all_elem(x, args));
              return;
            }
            for (const CTreeElem& cand : layer[comp[i]]) {
              args[i] = cand;
              inner(inner, i + 1);
            }
          };
          pick(pick, 0);
          return;
        }
        for (int d = 1; d <= rest - (r - slot - 1); ++d) {
          comp[slot] = d;
          self(self, slot + 1, rest - d);
        }
      };
      comps(comps, 0, m);
    }
  }
  return layer[n];
}

int colored_prim_dim(int n, int num_colors) {
  if (n < 1) throw std::invalid_argument("colored_prim_dim: n must be positive");
  if (n == 1) return 1;
  const std::vector<ColoredTree> basis = enumerate_colored(n, num_colors);
  std::map<std::pair<ColoredTree, ColoredTree>, std::size_t> rows;
  std::vector<CSplitPair> red(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    red[c] = ccoprod_red(ctree_elem(basis[c]));
    for (const auto& [ab, coef] : red[c].terms()) rows.try_emplace({*ab.first, *ab.second}, 0);
  }
  std::size_t r = 0;
  for (auto& [k, v] : rows) v = r++;
  IntMatrix m(rows.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [ab, coef] : red[c].terms())
      m.at(rows.at({*ab.first, *ab.second}), c) = coef;
  return static_cast<int>(basis.size() - rank(std::move(m)));
}

Operator make_operator(CTreeElem e) {
  if (e.is_zero()) throw std::invalid_argument("make_operator: zero element");
  int arity = -1;
  for (const auto& [b, c] : e.terms()) {
    if (!b) throw std::invalid_argument("make_operator: unit component");
    if (arity < 0) arity = b->leaves();
    if (b->leaves() != arity)
      throw std::invalid_argument("make_operator: element not homogeneous");
  }
  return Operator{std::move(e), arity};
}

Operator m_op(const Tree& t, std::span<const int> colors) {
  return make_operator(colored_moebius(t, colors));
}

Operator mhat_op(int s, int bp) {
  return make_operator(hat_wedge(ctree_elem(cleaf()), s, bp, ctree_elem(cleaf())));
}

Operator compose(const Operator& outer, int pos, const Operator& inner) {
  if (pos < 1 || pos > outer.arity) throw std::invalid_argument("compose: bad position");
  std::vector<CTreeElem> args(outer.arity, ctree_elem(cleaf()));
  args[pos - 1] = inner.elem;
  return make_operator(cgraft_all_elem(outer.elem, args));
}

// ---------------------------------------------------------------------------
// Verification sweeps

namespace {

/// Rank of the span of homogeneous degree-n elements inside the colored
/// basis of that degree.
int span_rank(const std::vector<CTreeElem>& elems, int n, int num_colors) {
  const std::vector<ColoredTree> basis = enumerate_colored(n, num_colors);
  std::map<ColoredTree, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  IntMatrix m(elems.size(), basis.size());
  for (std::size_t r = 0; r < elems.size(); ++r)
    for (const auto& [b, c] : elems[r].terms()) m.at(r, index.at(*b)) = c;
  return static_cast<int>(rank(std::move(m)));
}

Int ambient_dim(int n, int num_colors) {
  Int d = static_cast<long>(enumerate_trees(n).size());
  for (int i = 1; i < n; ++i) d *= num_colors;
  return d;
}

}  // namespace

Report verify_colored(int max_n, int num_colors, int bp, Exec exec) {
  return timed_report(
      "colored-structure", {{"max_n", max_n}, {"colors", num_colors}}, [&](Report& rep) {
        std::vector<int> dims(max_n + 1, 0);
        for (int n = 1; n <= max_n; ++n) dims[n] = colored_prim_dim(n, num_colors);

        for (int n = 1; n <= max_n; ++n) {
          const std::vector<CTreeElem> gens = gen_In(n, num_colors, bp);

          std::vector<char> prim(gens.size(), 1);
          par_for(gens.size(), exec, [&](std::size_t i) {
            prim[i] = is_primitive(gens[i]) ? 1 : 0;
          });
          bool all_prim = std::all_of(prim.begin(), prim.end(), [](char c) { return c; });
          rep.add("degree " + std::to_string(n) + ": generating family primitive (" +
                      std::to_string(gens.size()) + " elements)",
                  all_prim);

          int sr = span_rank(gens, n, num_colors);
          rep.add("degree " + std::to_string(n) + ": span of generators = kernel (dim " +
                      std::to_string(dims[n]) + ")",
                  sr == dims[n]);

          // Graded dimension identity: ambient dim = sum over compositions.
          Int total = 0;
          auto rec = [&](auto&& self, int rest, Int prod) -> void {
            if (rest == 0) {
              total += prod;
              return;
            }
            for (int c = 1; c <= rest; ++c) self(self, rest - c, prod * dims[c]);
          };
          rec(rec, n, Int(1));
          rep.add("degree " + std::to_string(n) + ": cotensor dimension identity",
                  total == ambient_dim(n, num_colors));
        }
      });
}

Report verify_colored_laws(int max_n, int num_colors, Exec exec) {
  return timed_report(
      "colored-coalgebra", {{"max_n", max_n}, {"colors", num_colors}}, [&](Report& rep) {
        // Coassociativity on every basis element.
        {
          bool ok = true;
          std::string ce;
          for (int n = 1; n <= max_n && ok; ++n) {
            const std::vector<ColoredTree> all = enumerate_colored(n, num_colors);
            std::vector<char> good(all.size(), 1);
            par_for(all.size(), exec, [&](std::size_t i) {
              CSplitPair d = ccoprod(ctree_elem(all[i]));
              LinComb<std::tuple<CTreeOrUnit, CTreeOrUnit, CTreeOrUnit>> l, r;
              for (const auto& [ab, c] : d.terms()) {
                for (const auto& [uv, cc] : ccoprod(CTreeElem::single(ab.first)).terms())
                  l.add({uv.first, uv.second, ab.second}, c * cc);
                for (const auto& [uv, cc] : ccoprod(CTreeElem::single(ab.second)).terms())
                  r.add({ab.first, uv.first, uv.second}, c * cc);
              }
              if (l != r) good[i] = 0;
            });
            for (std::size_t i = 0; i < all.size(); ++i)
              if (!good[i]) {
                ok = false;
                ce = all[i].str();
                break;
              }
          }
          rep.add("coassociativity", ok, ce);
        }

        // Unital infinitesimal law for every colored wedge.
        {
          bool ok = true;
          std::string ce;
          std::vector<ColoredTree> small;
          for (int n = 1; n <= std::min(max_n, 4); ++n)
            for (const ColoredTree& t : enumerate_colored(n, num_colors)) small.push_back(t);
          for (const ColoredTree& x : small) {
            for (const ColoredTree& y : small)
              for (int s = 0; s < num_colors && ok; ++s) {
                CSplitPair want = ccoprod(cwedge_elem(ctree_elem(x), s, ctree_elem(y)));
                CSplitPair got;
                for (const auto& [ab, c] : ccoprod(ctree_elem(x)).terms()) {
                  CTreeOrUnit snd =
                      ab.second ? CTreeOrUnit(cwedge(*ab.second, s, y))
                                : CTreeOrUnit(y);
                  got.add({ab.first, std::move(snd)}, c);
                }
                for (const auto& [ab, c] : ccoprod(ctree_elem(y)).terms()) {
                  CTreeOrUnit fst =
                      ab.first ? CTreeOrUnit(cwedge(x, s, *ab.first)) : CTreeOrUnit(x);
                  got.add({std::move(fst), ab.second}, c);
                }
                got.add({CTreeOrUnit(x), CTreeOrUnit(y)}, -1);
                if (got != want) {
                  ok = false;
                  ce = x.str() + " , " + y.str() + " color " + std::to_string(s);
                }
              }
            if (!ok) break;
          }
          rep.add("unital infinitesimal law for every colored wedge", ok, ce);
        }

        // Mixed associativity of the colored associative products.
        {
          bool ok = true;
          std::string ce;
          std::vector<ColoredTree> small;
          for (int n = 1; n <= std::min(max_n, 3); ++n)
            for (const ColoredTree& t : enumerate_colored(n, num_colors)) small.push_back(t);
          for (const ColoredTree& x : small)
            for (const ColoredTree& y : small)
              for (const ColoredTree& z : small)
                for (int r = 0; r < num_colors && ok; ++r)
                  for (int s = 0; s < num_colors; ++s) {
                    ColoredTree lhs = cunder(cunder(x, s, y), r, z);
                    ColoredTree rhs = cunder(x, s, cunder(y, r, z));
                    if (!(lhs == rhs)) {
                      ok = false;
                      ce = x.str() + "," + y.str() + "," + z.str();
                      break;
                    }
                  }
          rep.add("mixed associativity of colored under-products", ok, ce);
        }

        // Unique wedge decomposition of every nontrivial colored tree.
        {
          bool ok = true;
          std::string ce;
          for (int n = 2; n <= max_n && ok; ++n)
            for (const ColoredTree& t : enumerate_colored(n, num_colors)) {
              int nl = t.shape.left().leaves();
              ColoredTree l(t.shape.left(),
                            std::vector<int>(t.colors.begin(), t.colors.begin() + nl - 1));
              ColoredTree r(t.shape.right(),
                            std::vector<int>(t.colors.begin() + nl, t.colors.end()));
              if (!(cwedge(l, t.colors[nl - 1], r) == t)) {
                ok = false;
                ce = t.str();
                break;
              }
            }
          rep.add("unique colored wedge decomposition", ok, ce);
        }
      });
}

Report verify_operators(int num_colors, int bp, Exec exec) {
  return timed_report(
      "operator-calculus", {{"colors", num_colors}, {"basepoint", bp}}, [&](Report& rep) {
        const FreeMagmatic alg;
        const CTreeElem leaf = ctree_elem(cleaf());
        int s_other = bp == 0 ? 1 : 0;

        // Left-wedge comb expansion in terms of primitive operators:
        // (| v 0_n, (s, bp..bp)) = sum_j (0_j, bp..) grafted at leaf 1 with
        // the degree-(n+2-j) primitive comb element.
        {
          bool ok = true;
          std::string ce;
          auto m_power = [&](int k) -> CTreeElem {
            if (k == 1) return leaf;
            if (k == 2) return hat_wedge(leaf, s_other, bp, leaf);
            std::vector<int> w(k - 1, bp);
            w[0] = s_other;
            return colored_moebius(wedge(Tree::leaf(), comb_left(k - 1)), w);
          };
          for (int n = 1; n <= 5; ++n) {
            std::vector<int> word(n, bp);
            word[0] = s_other;
            CTreeElem lhs = ctree_elem(ColoredTree(wedge(Tree::leaf(), comb_left(n)), word));
            CTreeElem rhs;
            for (int j = 1; j <= n + 1; ++j) {
              ColoredTree host(comb_left(j), std::vector<int>(j - 1, bp));
              std::vector<CTreeElem> args(j, leaf);
              args[0] = m_power(n + 2 - j);
              rhs += cgraft_all_elem(ctree_elem(host), args);
            }
            if (lhs != rhs) {
              ok = false;
              ce = "n=" + std::to_string(n);
              break;
            }
          }
          rep.add("left-wedge comb expansion over primitive combs", ok, ce);
        }

        // Hat expansion of Moebius operators: multilinear expansion of each
        // color as (hat + basepoint).
        {
          bool ok = true;
          std::string ce;
          for (int n = 2; n <= 5 && ok; ++n)
            for (const Tree& t : enumerate_trees(n)) {
              for (auto& w : color_words(n - 1, num_colors)) {
                bool has_bp = std::any_of(w.begin(), w.end(), [&](int c) { return c == bp; });
                if (has_bp) continue;  // expansion applies to basepoint-free words
                CTreeElem lhs = colored_moebius(t, w);
                CTreeElem rhs;
                // subsets J of positions recolored to the basepoint; hatted
                // colors outside J.
                const int len = n - 1;
                for (int mask = 0; mask < (1 << len); ++mask) {
                  std::vector<ColorComb> slots(len);
                  for (int i = 0; i < len; ++i) {
                    if (mask & (1 << i))
                      slots[i] = {{bp, 1}};
                    else
                      slots[i] = {{w[i], 1}, {bp, -1}};
                  }
                  rhs += colored_moebius_multi(t, slots);
                }
                if (lhs != rhs) {
                  ok = false;
                  ce = t.paren();
                  break;
                }
              }
              if (!ok) break;
            }
          rep.add("hat expansion of Moebius operators", ok, ce);
        }

        // Composition relations along the right spine, checked both as
        // elements and through nested action on sample arguments.
        {
          bool ok_a = true, ok_b = true;
          std::string ce_a, ce_b;
          for (int n = 3; n <= 5; ++n)
            for (const Tree& t : enumerate_trees(n)) {
              // right spine blocks of t
              std::vector<Tree> blocks;
              Tree cur = t;
              while (!cur.is_leaf()) {
                blocks.push_back(cur.left());
                cur = cur.right();
              }
              const int k = static_cast<int>(blocks.size()) + 1;
              std::vector<int> offset(blocks.size() + 1, 0);
              for (std::size_t i = 0; i < blocks.size(); ++i)
                offset[i + 1] = offset[i] + blocks[i].leaves();
              for (auto& word : color_words(n - 1, num_colors)) {
                for (std::size_t i = 0; i < blocks.size(); ++i) {
                  const Tree& ti = blocks[i];
                  if (ti.is_leaf()) continue;
                  const int l = offset[i];
                  const int mi = ti.leaves();
                  // colors of block i sit at word positions l..l+mi-2
                  std::vector<int> inner_w(word.begin() + l, word.begin() + l + mi - 1);
                  std::vector<int> outer_w(word.begin(), word.begin() + l);
                  outer_w.insert(outer_w.end(), word.begin() + l + mi - 1, word.end());

                  // (a): extract the whole block.
                  {
                    std::vector<Tree> obl = blocks;
                    obl[i] = Tree::leaf();
                    Tree outer_tree = Tree::leaf();
                    for (int j = k - 2; j >= 0; --j) outer_tree = wedge(obl[j], outer_tree);
                    Operator lhs = m_op(t, word);
                    Operator rhs = compose(m_op(outer_tree, outer_w),
                                           l + 1, m_op(ti, inner_w));
                    if (ok_a && lhs.elem != rhs.elem) {
                      ok_a = false;
                      ce_a = t.paren();
                    }
                    // nested-action route on a tuple with one nontrivial
                    // primitive argument.
                    std::vector<CTreeElem> args(n, leaf);
                    args[l] = hat_wedge(leaf, s_other, bp, leaf);
                    std::vector<CTreeElem> inner_args(args.begin() + l,
                                                      args.begin() + l + mi);
                    std::vector<CTreeElem> outer_args(args.begin(), args.begin() + l);
                    outer_args.push_back(act(m_op(ti, inner_w), inner_args, alg));
                    outer_args.insert(outer_args.end(), args.begin() + l + mi, args.end());
                    if (ok_a && act(lhs, args, alg) !=
                                    act(m_op(outer_tree, outer_w), outer_args, alg)) {
                      ok_a = false;
                      ce_a = t.paren() + " (action route)";
                    }
                  }

                  // (b): extract the first irreducible factor of a reducible
                  // block.
                  std::vector<Tree> factors = factor_under(ti);
                  if (factors.size() >= 2) {
                    const Tree& w1 = factors[0];
                    const int h = w1.leaves();
                    std::optional<Tree> rest =
                        under_prod(std::span<const Tree>(factors).subspan(1));
                    std::vector<Tree> obl = blocks;
                    obl[i] = under(Tree::leaf(), *rest);
                    Tree outer_tree = Tree::leaf();
                    for (int j = k - 2; j >= 0; --j) outer_tree = wedge(obl[j], outer_tree);
                    // the inner factor's colors are the first h-1 of the block
                    std::vector<int> w1_w(word.begin() + l, word.begin() + l + h - 1);
                    std::vector<int> outer2_w(word.begin(), word.begin() + l);
                    outer2_w.insert(outer2_w.end(), word.begin() + l + h - 1, word.end());
                    Operator lhs = m_op(t, word);
                    Operator rhs =
                        compose(m_op(outer_tree, outer2_w), l + 1, m_op(w1, w1_w));
                    if (ok_b && lhs.elem != rhs.elem) {
                      ok_b = false;
                      ce_b = t.paren();
                    }
                  }
                }
              }
            }
          rep.add("composition relation: block extraction", ok_a, ce_a);
          rep.add("composition relation: first irreducible factor", ok_b, ce_b);
        }

        // Span equality between the full Moebius-operator family and the
        // reduced generating family, per arity.
        for (int n = 2; n <= 4; ++n) {
          auto closure = [&](std::vector<std::vector<CTreeElem>> base) {
            // base[m] = arity-m seeds; saturate under composition.
            bool grew = true;
            while (grew) {
              grew = false;
              for (int outer_a = 2; outer_a <= n; ++outer_a)
                for (int inner_a = 2; inner_a <= n; ++inner_a) {
                  int res = outer_a + inner_a - 1;
                  if (res > n) continue;
                  std::vector<CTreeElem> fresh;
                  for (const CTreeElem& o : base[outer_a])
                    for (const CTreeElem& in : base[inner_a])
                      for (int pos = 1; pos <= outer_a; ++pos) {
                        CTreeElem comp =
                            compose(make_operator(o), pos, make_operator(in)).elem;
                        bool known =
                            std::any_of(base[res].begin(), base[res].end(),
                                        [&](const CTreeElem& e) { return e == comp; }) ||
                            std::any_of(fresh.begin(), fresh.end(),
                                        [&](const CTreeElem& e) { return e == comp; });
                        if (!known) fresh.push_back(std::move(comp));
                      }
                  if (!fresh.empty()) {
                    grew = true;
                    base[res].insert(base[res].end(), fresh.begin(), fresh.end());
                  }
                }
            }
            return base;
          };

          std::vector<std::vector<CTreeElem>> full(n + 1), reduced(n + 1);
          for (int s = 0; s < num_colors; ++s)
            if (s != bp) {
              full[2].push_back(mhat_op(s, bp).elem);
              reduced[2].push_back(mhat_op(s, bp).elem);
            }
          for (int m = 3; m <= n; ++m)
            for (const Tree& t : enumerate_trees(m)) {
              if (!is_under_irreducible(t)) continue;
              for (auto& w : color_words(m - 1, num_colors)) {
                full[m].push_back(m_op(t, w).elem);
                // reduced family, basket one: right combs with at least one
                // basepoint color.
                if (t == comb_right(m) &&
                    std::any_of(w.begin(), w.end(), [&](int c) { return c == bp; }))
                  reduced[m].push_back(m_op(t, w).elem);
              }
            }
          // reduced family, basket two: right combs grafted with interior
          // blocks that are a leaf or leaf-under-t', the first node of every
          // nontrivial block coloured by the basepoint, all other colors
          // free.
          for (int m = 4; m <= n; ++m)
            for (int k = 3; k <= m - 1; ++k) {
              const int interior = k - 2, budget = m - 2;
              // enumerate interior degree tuples summing to budget
              std::vector<std::vector<int>> tuples;
              std::vector<int> cur(interior);
              auto rec = [&](auto&& self, int slot, int rest) -> void {
                if (slot == interior) {
                  if (rest == 0) tuples.push_back(cur);
                  return;
                }
                for (int d = 1; d <= rest - (interior - slot - 1); ++d) {
                  cur[slot] = d;
                  self(self, slot + 1, rest - d);
                }
              };
              rec(rec, 0, budget);
              for (const auto& degs : tuples) {
                if (std::all_of(degs.begin(), degs.end(), [](int d) { return d == 1; }))
                  continue;  // the plain right comb, covered above
                // choices of the t' shapes for blocks of degree >= 2
                std::vector<std::vector<Tree>> shape_choices(interior);
                for (int j = 0; j < interior; ++j)
                  shape_choices[j] =
                      degs[j] == 1 ? std::vector<Tree>{Tree::leaf()} : enumerate_trees(degs[j] - 1);
                std::vector<std::size_t> pick(interior, 0);
                while (true) {
                  std::vector<Tree> blocks(interior);
                  std::vector<int> forced(m - 1, -1);  // -1 = free color slot
                  // infix layout: comb node, block colors, comb node, ...;
                  // block j's colors start right after position sum(degs<j).
                  int start = 1;
                  for (int j = 0; j < interior; ++j) {
                    if (degs[j] == 1) {
                      blocks[j] = Tree::leaf();
                    } else {
                      blocks[j] = under(Tree::leaf(), shape_choices[j][pick[j]]);
                      forced[start] = bp;  // first node of the block
                    }
                    start += degs[j];  // block colors plus the next comb node
                  }
                  Tree t = Tree::leaf();
                  for (int j = interior - 1; j >= 0; --j) t = wedge(blocks[j], t);
                  t = wedge(Tree::leaf(), t);
                  // fill the free slots with every color word
                  std::vector<int> free_pos;
                  for (int i = 0; i < m - 1; ++i)
                    if (forced[i] < 0) free_pos.push_back(i);
                  for (auto& fw : color_words(static_cast<int>(free_pos.size()), num_colors)) {
                    std::vector<int> word = forced;
                    for (std::size_t i = 0; i < free_pos.size(); ++i)
                      word[free_pos[i]] = fw[i];
                    reduced[m].push_back(m_op(t, word).elem);
                  }
                  int j = interior - 1;
                  while (j >= 0 && pick[j] + 1 == shape_choices[j].size()) pick[j--] = 0;
                  if (j < 0) break;
                  ++pick[j];
                }
              }
            }
          full = closure(std::move(full));
          reduced = closure(std::move(reduced));
          std::vector<CTreeElem> both = full[n];
          both.insert(both.end(), reduced[n].begin(), reduced[n].end());
          int rf = span_rank(full[n], n, num_colors);
          int rr = span_rank(reduced[n], n, num_colors);
          int rb = span_rank(both, n, num_colors);
          rep.add("arity " + std::to_string(n) + ": operator span equality (dim " +
                      std::to_string(rf) + ")",
                  rf == rr && rf == rb);
        }
        (void)exec;
      });
}

}  // namespace tamari
