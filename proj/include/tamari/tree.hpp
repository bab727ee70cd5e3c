#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tamari {

/// Planar binary rooted tree, graded by its number of leaves.
///
/// A tree is either the single leaf `|` or a node joining an ordered pair of
/// subtrees.  Values are immutable after construction and cheap to copy;
/// structural sharing is safe across threads.
///
/// Two text codecs are provided and both round-trip:
///  - parenthesized form: `|` for the leaf, `(L R)` for a node;
///  - Dyck word: the leaf is the empty word and a node is encoded as
///    `"1" + dyck(right) + "0" + dyck(left)`, giving a word of length
///    2(leaves-1) whose lexicographic order sorts the left comb first.
class Tree {
 public:
  /// The leaf.
  Tree() = default;

  static Tree leaf() { return Tree(); }
  static Tree node(const Tree& l, const Tree& r);

  bool is_leaf() const { return impl_ == nullptr; }
  Tree left() const;   // requires !is_leaf()
  Tree right() const;  // requires !is_leaf()

  /// Number of leaves (the degree of the tree).
  int leaves() const;
  /// Number of internal nodes, leaves() - 1.  Internal nodes are indexed
  /// 1..nodes() in infix (left-to-right) order.
  int nodes() const { return leaves() - 1; }

  /// Canonical Dyck encoding (empty for the leaf).
  const std::string& dyck() const;
  /// Parenthesized encoding, e.g. "((| |) |)".
  std::string paren() const;

  static Tree from_dyck(std::string_view w);
  /// Parses the parenthesized form; whitespace between tokens is ignored,
  /// so "(|(||))" and "(| (| |))" both parse.
  static Tree parse(std::string_view s);

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.impl_ == b.impl_ || a.dyck() == b.dyck();
  }
  friend bool operator!=(const Tree& a, const Tree& b) { return !(a == b); }
  /// Graded order: first by number of leaves, then lexicographic on the
  /// Dyck word.  This is the enumeration order within each degree.
  friend bool operator<(const Tree& a, const Tree& b) {
    if (a.leaves() != b.leaves()) return a.leaves() < b.leaves();
    return a.dyck() < b.dyck();
  }

 private:
  struct Impl;
  explicit Tree(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;  // null = leaf
};

/// t wedge w: joins the roots of t and w under a new root, t on the left.
Tree wedge(const Tree& t, const Tree& w);

/// Grafting: replaces the j-th leaf of t (infix order, 1-based) by w.
/// Throws std::invalid_argument unless 1 <= j <= t.leaves().
Tree graft(const Tree& t, int j, const Tree& w);

/// Simultaneous grafting of one tree per leaf of t; equals the iterated
/// graft performed right to left.  Throws on arity mismatch.
Tree graft_all(const Tree& t, std::span<const Tree> ws);

/// The associative product: under(t, w) = graft(w, 1, wedge(t, leaf)).
Tree under(const Tree& t, const Tree& w);
/// Same with the formal unit allowed on either side (nullopt = unit).
std::optional<Tree> under(const std::optional<Tree>& t, const std::optional<Tree>& w);
/// Product of a sequence of trees under `under`; empty product = unit.
std::optional<Tree> under_prod(std::span<const Tree> ts);

/// Left comb 0_n (Tamari minimum) and right comb 1_n (Tamari maximum);
/// 0_1 = 1_1 = leaf.  Throws std::invalid_argument for n < 1.
Tree comb_left(int n);
Tree comb_right(int n);

/// All trees with n leaves in the canonical order (Catalan(n-1) of them).
/// Throws std::invalid_argument for n < 1.
std::vector<Tree> enumerate_trees(int n);

/// True iff t admits no factorization t = u under w into two trees.
/// Equivalently: t is the leaf, or t = l wedge r with l irreducible and
/// r.leaves() > 1.
bool is_under_irreducible(const Tree& t);

/// The unique maximal factorization t = t_1 under ... under t_r into
/// irreducible factors.
std::vector<Tree> factor_under(const Tree& t);

/// Splits t between leaf i and leaf i+1 (0 <= i <= leaves): returns the tree
/// induced on leaves 1..i and the tree induced on leaves i+1..n, with
/// nullopt for the empty side.  This is the i-th summand of the coproduct in
/// its direct, vertex-removal description.
std::pair<std::optional<Tree>, std::optional<Tree>> split_at(const Tree& t, int i);

}  // namespace tamari
