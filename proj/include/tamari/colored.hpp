#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamari/bigint.hpp"
#include "tamari/lincomb.hpp"
#include "tamari/parallel.hpp"
#include "tamari/report.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Tree with one color per internal node, indexed in infix order.  Colors
/// are small integers into a caller-declared palette; a distinguished
/// basepoint color is passed explicitly where an operation needs one.
struct ColoredTree {
  Tree shape;
  std::vector<int> colors;

  ColoredTree() = default;  // the leaf, no colors
  ColoredTree(Tree s, std::vector<int> c);

  int leaves() const { return shape.leaves(); }
  int nodes() const { return shape.nodes(); }
  std::string str(std::span<const std::string> names = {}) const;

  friend bool operator==(const ColoredTree& a, const ColoredTree& b) {
    return a.shape == b.shape && a.colors == b.colors;
  }
  friend bool operator<(const ColoredTree& a, const ColoredTree& b) {
    if (a.shape != b.shape) return a.shape < b.shape;
    return a.colors < b.colors;
  }
};

using CTreeOrUnit = std::optional<ColoredTree>;
using CTreeElem = LinComb<CTreeOrUnit>;
using CSplitPair = LinComb<std::pair<CTreeOrUnit, CTreeOrUnit>>;

inline CTreeElem cunit_elem() { return CTreeElem::single(std::nullopt); }
inline CTreeElem ctree_elem(ColoredTree t) { return CTreeElem::single(CTreeOrUnit(std::move(t))); }
inline ColoredTree cleaf() { return ColoredTree(); }

/// s-wedge: shapes wedge, color words concatenate around s.
ColoredTree cwedge(const ColoredTree& t, int s, const ColoredTree& w);
/// s-under: shapes compose under the associative product, same color word.
ColoredTree cunder(const ColoredTree& t, int s, const ColoredTree& w);
/// Grafting of one colored tree per leaf; color words splice in node order.
ColoredTree cgraft_all(const ColoredTree& t, std::span<const ColoredTree> ws);

CTreeElem cwedge_elem(const CTreeElem& x, int s, const CTreeElem& y);
CTreeElem cunder_elem(const CTreeElem& x, int s, const CTreeElem& y);
CTreeElem cgraft_all_elem(const CTreeElem& x0, std::span<const CTreeElem> xs);

/// Coproduct: splits the shape and drops the color at the split node.
CSplitPair ccoprod(const CTreeElem& x);
CSplitPair ccoprod_red(const CTreeElem& x);
bool is_primitive(const CTreeElem& x);

/// Hat wedge against the basepoint: cwedge(x, s, y) - cwedge(x, bp, y).
/// Throws std::invalid_argument when s == bp.
CTreeElem hat_wedge(const CTreeElem& x, int s, int bp, const CTreeElem& y);

/// Moebius element of the shape with a fixed color word on every term.
CTreeElem colored_moebius(const Tree& t, std::span<const int> colors);

/// Moebius element with a formal linear combination of colors in each slot,
/// expanded multilinearly.  A slot {(s,1)} is the plain color s; a slot
/// {(s,1),(bp,-1)} is the hatted color.
using ColorComb = std::vector<std::pair<int, Int>>;
CTreeElem colored_moebius_multi(const Tree& t, std::span<const ColorComb> slots);

/// All colored trees of degree n over num_colors colors, canonical order.
std::vector<ColoredTree> enumerate_colored(int n, int num_colors);
/// All color words of the given length, lexicographic.
std::vector<std::vector<int>> color_words(int length, int num_colors);

/// The generating family of primitive elements in degree n: degree 1 the
/// leaf, degree 2 the hat wedges, larger degrees the colored Moebius
/// elements of under-irreducible shapes together with all graftings of
/// lower-degree members.  A spanning family, not a basis.
std::vector<CTreeElem> gen_In(int n, int num_colors, int bp);

/// dim ker(reduced coproduct) in degree n over num_colors colors.
int colored_prim_dim(int n, int num_colors);

// ---------------------------------------------------------------------------
// Operator calculus

/// Homogeneous element of degree n viewed as an n-ary multilinear operator
/// on any algebra with one binary product per color.
struct Operator {
  CTreeElem elem;
  int arity = 0;
};

Operator make_operator(CTreeElem e);  // validates nonzero homogeneous, unit-free
Operator m_op(const Tree& t, std::span<const int> colors);
Operator mhat_op(int s, int bp);
/// Operator composition: plugs `inner` into argument slot `pos` (1-based) of
/// `outer`; on the free algebra this is grafting with identity slots.
Operator compose(const Operator& outer, int pos, const Operator& inner);

/// Algebra handle concept: `Alg` provides `Elem` (a LinComb type) and
/// `Elem prod(int color, const Elem&, const Elem&) const`, bilinear.
template <class Alg>
typename Alg::Elem act_shape(const Alg& alg, const Tree& shape, std::span<const int> colors,
                             std::span<const typename Alg::Elem> args) {
  if (shape.is_leaf()) return args[0];
  const int nl = shape.left().leaves();
  typename Alg::Elem l =
      act_shape(alg, shape.left(), colors.subspan(0, nl - 1), args.subspan(0, nl));
  typename Alg::Elem r = act_shape(alg, shape.right(), colors.subspan(nl), args.subspan(nl));
  return alg.prod(colors[nl - 1], l, r);
}

/// Action of an operator, linear in the operator and in each argument.
/// Throws std::invalid_argument on arity mismatch.
template <class Alg>
typename Alg::Elem act(const CTreeElem& op, std::span<const typename Alg::Elem> args,
                       const Alg& alg) {
  typename Alg::Elem out;
  for (const auto& [b, c] : op.terms()) {
    if (!b) throw std::invalid_argument("act: unit component in operator");
    if (b->leaves() != static_cast<int>(args.size()))
      throw std::invalid_argument("act: arity mismatch");
    typename Alg::Elem v = act_shape(alg, b->shape, b->colors, args);
    v *= c;
    out += v;
  }
  return out;
}

template <class Alg>
typename Alg::Elem act(const Operator& op, std::span<const typename Alg::Elem> args,
                       const Alg& alg) {
  return act(op.elem, args, alg);
}

/// The free algebra on one generator acting on itself.
struct FreeMagmatic {
  using Elem = CTreeElem;
  Elem prod(int color, const Elem& x, const Elem& y) const {
    return cwedge_elem(x, color, y);
  }
};

// ---------------------------------------------------------------------------
// Verification sweeps

/// Kernel dimensions, primitivity and span of the generating family, and the
/// graded cotensor dimension identity, per degree.
Report verify_colored(int max_n, int num_colors, int bp, Exec exec = Exec::parallel);
/// Coalgebra laws for colored trees: coassociativity, the unital
/// infinitesimal law for every colored wedge, mixed associativity of the
/// colored associative products, unique wedge decomposition.
Report verify_colored_laws(int max_n, int num_colors, Exec exec = Exec::parallel);
/// Operator-calculus identities: the comb expansion of a left-wedge colored
/// comb, hat expansion of Moebius operators, composition relations, and the
/// span equality between the full operator family and its reduced
/// generating set.
Report verify_operators(int num_colors, int bp, Exec exec = Exec::parallel);

}  // namespace tamari
