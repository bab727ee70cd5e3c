#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamari/colored.hpp"
#include "tamari/lincomb.hpp"
#include "tamari/order.hpp"
#include "tamari/parallel.hpp"
#include "tamari/report.hpp"

namespace tamari {

/// Reflexive integer relation of size n, stored as its set of non-diagonal
/// arcs (i, j) with 1 <= i, j <= n, i != j, kept sorted.  Size 0 is the
/// coalgebra unit.
struct IntRel {
  int n = 0;
  std::vector<std::pair<int, int>> arcs;

  IntRel() = default;
  explicit IntRel(int size) : n(size) {}
  IntRel(int size, std::vector<std::pair<int, int>> a);

  bool has(int i, int j) const;
  std::string str() const;

  friend bool operator==(const IntRel& a, const IntRel& b) {
    return a.n == b.n && a.arcs == b.arcs;
  }
  friend bool operator<(const IntRel& a, const IntRel& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.arcs < b.arcs;
  }
};

/// The unique relation of size 1.
inline IntRel rel_one() { return IntRel(1); }

/// The four block products: disjoint union, all upward cross arcs, all
/// downward cross arcs, both.
enum class RelOp { sq, up, down, updown };

/// Word over the four letters encoding a graded magmatic product; the empty
/// word is the disjoint union and a nonempty word must not end in sq.
using AlphaMap = std::vector<RelOp>;
bool alpha_valid(const AlphaMap& a);
std::string alpha_str(const AlphaMap& a);
/// All valid words of size <= max_size (the empty word first).
std::vector<AlphaMap> enumerate_alphas(int max_size);

using RelElem = LinComb<IntRel>;
using RelSplitPair = LinComb<std::pair<IntRel, IntRel>>;

/// Restriction to a subset of positions (1-based, strictly increasing),
/// relabelled order-preservingly.
IntRel restrict_rel(const IntRel& r, std::span<const int> positions);
/// Relabel arcs through a permutation: (i,j) in r iff (p(i),p(j)) in result.
IntRel apply_perm_rel(const Permutation& p, const IntRel& r);

IntRel prod_basic(const IntRel& r, const IntRel& q, RelOp op);
/// Graded magmatic product: disjoint union plus arcs from the last point of
/// the left factor to the i-th point of the right factor, pattern alpha.
IntRel prod_alpha(const IntRel& r, const IntRel& q, const AlphaMap& alpha);

RelElem prod_basic_elem(const RelElem& x, const RelElem& y, RelOp op);
RelElem prod_alpha_elem(const RelElem& x, const RelElem& y, const AlphaMap& alpha);

/// Coproduct by prefix/suffix restriction, n+1 summands.
RelSplitPair coprod_rel(const RelElem& x);
RelSplitPair coprod_rel_red(const RelElem& x);
bool is_primitive(const RelElem& x);

/// Shuffle product: sum of relabels of r op q over all block shuffles.
RelElem shuffle_prod(const IntRel& r, const IntRel& q, RelOp op);
RelElem shuffle_prod_elem(const RelElem& x, const RelElem& y, RelOp op);

/// Extracts the word gamma and the restriction to positions 2..n such that
/// r = one *_gamma rest; gamma is the empty word when no arc touches 1.
/// Throws std::invalid_argument for size < 2.
std::pair<AlphaMap, IntRel> left_factor(const IntRel& r);

/// Unique maximal factorization under disjoint union.
std::vector<IntRel> sqcup_factor(const IntRel& r);
bool is_sqcup_irreducible(const IntRel& r);

/// All 4^(n(n-1)/2) relations of size n in canonical (arc-mask) order.
std::vector<IntRel> enumerate_rels(int n);

/// Primitive element attached to a disjoint-union-irreducible relation;
/// unitriangular with respect to strict arc-set inclusion.
/// Throws std::invalid_argument on reducible input.
RelElem xi(const IntRel& r);

/// Algebra handle exposing the word products as colors for the operator
/// action; color index i means palette[i], with palette[0] customarily the
/// empty word (the basepoint).
struct RelAlgebra {
  using Elem = RelElem;
  std::vector<AlphaMap> palette;
  Elem prod(int color, const Elem& x, const Elem& y) const {
    return prod_alpha_elem(x, y, palette.at(color));
  }
};

nlohmann::json rel_json(const IntRel& r);
IntRel rel_from_json(const nlohmann::json& j);

/// Counts, associativity + mixed counterexample, infinitesimal laws, Hopf
/// compatibility of the shuffles, the bounded-associativity sweep, and the
/// generation round trip.
Report verify_intrel(int max_gen_n, Exec exec = Exec::parallel);
/// Primitivity, triangularity and basis property of the xi images
/// (exhaustive n <= 3; sampled at n = 4; optional exact kernel at n = 4).
Report verify_xi(int sample4, bool full_kernel4, Exec exec = Exec::parallel);
/// Vanishing and unitriangularity of right-comb Moebius operators evaluated
/// on relation tuples.
Report verify_rel_operators(int sample4, Exec exec = Exec::parallel);

}  // namespace tamari
