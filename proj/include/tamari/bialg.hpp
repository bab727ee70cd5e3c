#pragma once

#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "tamari/lincomb.hpp"
#include "tamari/parallel.hpp"
#include "tamari/report.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Basis symbol of the coalgebra on trees: a tree, or the formal degree-0
/// unit (nullopt).  The unit is never a Tree.
using TreeOrUnit = std::optional<Tree>;
/// Element of the span of trees and the unit.
using TreeElem = LinComb<TreeOrUnit>;
/// Element of the tensor square.
using SplitPair = LinComb<std::pair<TreeOrUnit, TreeOrUnit>>;
using SplitTriple = LinComb<std::tuple<TreeOrUnit, TreeOrUnit, TreeOrUnit>>;

inline int degree(const TreeOrUnit& x) { return x ? x->leaves() : 0; }
inline TreeElem unit_elem() { return TreeElem::single(std::nullopt); }
inline TreeElem tree_elem(const Tree& t) { return TreeElem::single(TreeOrUnit(t)); }

/// wedge with the convention that an empty side passes the other through;
/// this is the convention under which the coproduct recursion closes, not a
/// unit law for wedge.
inline TreeOrUnit wedge_pass(const TreeOrUnit& a, const TreeOrUnit& b) {
  if (!a) return b;
  if (!b) return a;
  return wedge(*a, *b);
}

/// Bilinear wedge; inputs must be unit-free.
TreeElem wedge_elem(const TreeElem& x, const TreeElem& y);
/// Bilinear associative product with the formal unit as two-sided unit.
TreeElem under_elem(const TreeElem& x, const TreeElem& y);
/// Multilinear grafting: x0 homogeneous of degree r grafted with r elements.
TreeElem graft_all_elem(const TreeElem& x0, std::span<const TreeElem> xs);

/// The coproduct, defined on a tree by the wedge recursion and extended
/// linearly; a tree of degree n has exactly n+1 summands of bidegrees
/// (i, n-i).
SplitPair coprod(const TreeElem& x);
SplitPair coprod_tree(const Tree& t);

/// Reduced coproduct: strips the two extremal summands.  The argument must
/// have zero unit component.
SplitPair coprod_red(const TreeElem& x);
bool is_primitive(const TreeElem& x);

/// Iterated reduced coproduct into k+1 tensor factors (k >= 0); all factors
/// are unit-free trees.  Vanishes for k >= degree on homogeneous input.
LinComb<std::vector<Tree>> coprod_iter(const TreeElem& x, int k);

/// The degree-shifted coproduct: pairs the left part of the (i+1)-split with
/// the right part of the i-split, giving n summands of bidegrees (i+1, n-i).
/// Unit components are invalid.
SplitPair delta(const TreeElem& x);

/// Moebius element of t computed recursively from the comb recursion and
/// spine grafting; no poset is built.
TreeElem moebius_elem(const Tree& t);
inline TreeElem moebius_elem(const TreeOrUnit& t) {
  return t ? moebius_elem(*t) : unit_elem();
}
/// Moebius element by its defining sum over the Tamari interval below t.
TreeElem moebius_elem_oracle(const Tree& t);

/// Both sides of the coproduct-of-grafting identity at one leaf position.
std::pair<SplitPair, SplitPair> coprod_of_graft_sides(const Tree& t, int k, const Tree& w);
/// Both sides of the coproduct identity for simultaneous grafting.
std::pair<SplitPair, SplitPair> coprod_of_graft_all_sides(const Tree& t,
                                                          std::span<const Tree> ws);

/// Moebius elements of the under-irreducible trees of degree n; a basis of
/// the primitive subspace in that degree.
std::vector<TreeElem> primitive_basis(int n);
/// Dimension of ker(reduced coproduct) in degree n, by exact integer kernel
/// computation.
int prim_dim(int n);
/// Graded-dimension consequence of the structure theorem: #trees(n) equals
/// the sum over compositions of n of products of primitive dimensions.
bool cotensor_dim_check(int n);

/// Coproduct of every Moebius element against its two-factor splittings,
/// exhaustively per degree.
Report verify_as(int max_n, Exec exec = Exec::parallel);
/// Recursive Moebius elements against the interval-sum oracle.
Report verify_moebius(int max_n, Exec exec = Exec::parallel);
/// Coassociativity, the unital infinitesimal laws, the coderivation law and
/// the grafting compatibility identities.
Report verify_coalgebra(int coassoc_n, int pair_leaves, Exec exec = Exec::parallel);
/// Primitive dimensions by kernel vs irreducible count, and the cotensor
/// dimension identity.
Report verify_prim_dims(int kernel_n, int cotensor_n);

std::string show(const TreeOrUnit& x);

}  // namespace tamari
