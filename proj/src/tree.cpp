#include "tamari/tree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace tamari {

struct Tree::Impl {
  Tree left;
  Tree right;
  int leaves;
  std::string dyck;
};

Tree Tree::node(const Tree& l, const Tree& r) {
  auto impl = std::make_shared<Impl>();
  impl->left = l;
  impl->right = r;
  impl->leaves = l.leaves() + r.leaves();
  impl->dyck.reserve(2 * (impl->leaves - 1));
  impl->dyck += '1';
  impl->dyck += r.dyck();
  impl->dyck += '0';
  impl->dyck += l.dyck();
  return Tree(std::move(impl));
}

Tree Tree::left() const {
  assert(impl_);
  return impl_->left;
}

Tree Tree::right() const {
  assert(impl_);
  return impl_->right;
}

int Tree::leaves() const { return impl_ ? impl_->leaves : 1; }

const std::string& Tree::dyck() const {
  static const std::string empty;
  return impl_ ? impl_->dyck : empty;
}

std::string Tree::paren() const {
  if (is_leaf()) return "|";
  return "(" + left().paren() + " " + right().paren() + ")";
}

namespace {

// Grammar: T -> "" | '1' T_right '0' T_left.  A '0' or end of input closes
// the current subtree, so the parse is unambiguous.
Tree parse_dyck(std::string_view w, std::size_t& pos) {
  if (pos >= w.size() || w[pos] != '1') return Tree::leaf();
  ++pos;
  Tree r = parse_dyck(w, pos);
  if (pos >= w.size() || w[pos] != '0')
    throw std::invalid_argument("malformed dyck word: missing '0'");
  ++pos;
  Tree l = parse_dyck(w, pos);
  return Tree::node(l, r);
}

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\n')) ++pos;
}

Tree parse_paren(std::string_view s, std::size_t& pos) {
  skip_ws(s, pos);
  if (pos >= s.size()) throw std::invalid_argument("unexpected end of tree literal");
  if (s[pos] == '|') {
    ++pos;
    return Tree::leaf();
  }
  if (s[pos] != '(') throw std::invalid_argument("expected '(' or '|' in tree literal");
  ++pos;
  Tree l = parse_paren(s, pos);
  Tree r = parse_paren(s, pos);
  skip_ws(s, pos);
  if (pos >= s.size() || s[pos] != ')')
    throw std::invalid_argument("expected ')' in tree literal");
  ++pos;
  return Tree::node(l, r);
}

}  // namespace

Tree Tree::from_dyck(std::string_view w) {
  for (char c : w)
    if (c != '0' && c != '1') throw std::invalid_argument("dyck word must be over {0,1}");
  std::size_t pos = 0;
  Tree t = parse_dyck(w, pos);
  if (pos != w.size()) throw std::invalid_argument("trailing characters in dyck word");
  return t;
}

Tree Tree::parse(std::string_view s) {
  std::size_t pos = 0;
  Tree t = parse_paren(s, pos);
  skip_ws(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing characters in tree literal");
  return t;
}

Tree wedge(const Tree& t, const Tree& w) { return Tree::node(t, w); }

Tree graft(const Tree& t, int j, const Tree& w) {
  if (j < 1 || j > t.leaves()) throw std::invalid_argument("graft: leaf index out of range");
  if (t.is_leaf()) return w;
  if (w.is_leaf()) return t;  // identity graft
  int nl = t.left().leaves();
  if (j <= nl) return Tree::node(graft(t.left(), j, w), t.right());
  return Tree::node(t.left(), graft(t.right(), j - nl, w));
}

Tree graft_all(const Tree& t, std::span<const Tree> ws) {
  if (static_cast<int>(ws.size()) != t.leaves())
    throw std::invalid_argument("graft_all: arity mismatch");
  if (t.is_leaf()) return ws[0];
  int nl = t.left().leaves();
  return Tree::node(graft_all(t.left(), ws.subspan(0, nl)),
                    graft_all(t.right(), ws.subspan(nl)));
}

Tree under(const Tree& t, const Tree& w) { return graft(w, 1, wedge(t, Tree::leaf())); }

std::optional<Tree> under(const std::optional<Tree>& t, const std::optional<Tree>& w) {
  if (!t) return w;
  if (!w) return t;
  return under(*t, *w);
}

std::optional<Tree> under_prod(std::span<const Tree> ts) {
  std::optional<Tree> acc;
  for (const Tree& t : ts) acc = under(acc, std::optional<Tree>(t));
  return acc;
}

Tree comb_left(int n) {
  if (n < 1) throw std::invalid_argument("comb_left: n must be positive");
  Tree t = Tree::leaf();
  for (int i = 2; i <= n; ++i) t = wedge(t, Tree::leaf());
  return t;
}

Tree comb_right(int n) {
  if (n < 1) throw std::invalid_argument("comb_right: n must be positive");
  Tree t = Tree::leaf();
  for (int i = 2; i <= n; ++i) t = wedge(Tree::leaf(), t);
  return t;
}

std::vector<Tree> enumerate_trees(int n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be positive");
  std::vector<std::vector<Tree>> by_n(n + 1);
  by_n[1] = {Tree::leaf()};
  for (int m = 2; m <= n; ++m) {
    for (int i = 1; i < m; ++i)
      for (const Tree& l : by_n[i])
        for (const Tree& r : by_n[m - i]) by_n[m].push_back(Tree::node(l, r));
    std::sort(by_n[m].begin(), by_n[m].end());
  }
  return std::move(by_n[n]);
}

bool is_under_irreducible(const Tree& t) {
  if (t.is_leaf()) return true;
  return is_under_irreducible(t.left()) && t.right().leaves() > 1;
}

std::vector<Tree> factor_under(const Tree& t) {
  // t = l wedge r.  If r is the leaf then t = l under leaf; otherwise the
  // first factor of t is the first factor of l, via (u under v) wedge r =
  // u under (v wedge r).
  if (t.is_leaf()) return {t};
  Tree l = t.left(), r = t.right();
  if (r.is_leaf()) {
    std::vector<Tree> f = factor_under(l);
    f.push_back(Tree::leaf());
    return f;
  }
  std::vector<Tree> fl = factor_under(l);
  if (fl.size() == 1) return {t};  // l irreducible and |r| > 1
  std::optional<Tree> rest = under_prod(std::span<const Tree>(fl).subspan(1));
  std::vector<Tree> f = {fl[0]};
  std::vector<Tree> tail = factor_under(wedge(*rest, r));
  f.insert(f.end(), tail.begin(), tail.end());
  return f;
}

std::pair<std::optional<Tree>, std::optional<Tree>> split_at(const Tree& t, int i) {
  int n = t.leaves();
  if (i < 0 || i > n) throw std::invalid_argument("split_at: index out of range");
  if (i == 0) return {std::nullopt, t};
  if (i == n) return {t, std::nullopt};
  // 0 < i < n, so t is a node and both sides are nonempty.
  int nl = t.left().leaves();
  if (i == nl) return {t.left(), t.right()};
  if (i < nl) {
    auto [a, b] = split_at(t.left(), i);
    return {a, wedge(*b, t.right())};
  }
  auto [a, b] = split_at(t.right(), i - nl);
  return {wedge(t.left(), *a), b};
}

}  // namespace tamari
