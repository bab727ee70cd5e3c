#include "tamari/order.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <stdexcept>

#include "tamari/errors.hpp"

namespace tamari {

bool is_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation standardize(std::span<const int> word) {
  const int n = static_cast<int>(word.size());
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return word[a] < word[b]; });
  for (int i = 0; i + 1 < n; ++i)
    if (word[idx[i]] == word[idx[i + 1]])
      throw std::invalid_argument("standardize: entries must be pairwise distinct");
  Permutation out(n);
  for (int r = 0; r < n; ++r) out[idx[r]] = r + 1;
  return out;
}

Permutation restrict_perm(const Permutation& sigma, std::span<const int> positions) {
  std::vector<int> vals;
  vals.reserve(positions.size());
  for (int pos : positions) {
    if (pos < 1 || pos > static_cast<int>(sigma.size()))
      throw std::invalid_argument("restrict_perm: position out of range");
    vals.push_back(sigma[pos - 1]);
  }
  return standardize(vals);
}

std::vector<Permutation> bruhat_covers(const Permutation& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
  std::vector<Permutation> out;
  for (int i = 1; i < n; ++i) {
    if (pos[i] < pos[i + 1]) {
      Permutation tau = sigma;
      tau[pos[i]] = i + 1;
      tau[pos[i + 1]] = i;
      out.push_back(std::move(tau));
    }
  }
  return out;
}

Tree tonks(const Permutation& sigma) {
  if (!is_permutation(sigma)) throw std::invalid_argument("tonks: not a permutation");
  const int n = static_cast<int>(sigma.size());
  if (n == 0) return Tree::leaf();
  int k = 0;
  while (sigma[k] != n) ++k;  // position of the maximal value
  std::vector<int> pre(sigma.begin(), sigma.begin() + k);
  std::vector<int> suf(sigma.begin() + k + 1, sigma.end());
  return wedge(tonks(standardize(pre)), tonks(standardize(suf)));
}

// ---------------------------------------------------------------------------
// Poset

Poset::Poset(int n, std::vector<std::pair<int, int>> cover_edges)
    : n_(n), covers_(std::move(cover_edges)) {
  std::vector<std::vector<int>> above(n_), below(n_);
  std::vector<int> indeg(n_, 0);
  for (auto [a, b] : covers_) {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
      throw std::invalid_argument("Poset: bad cover edge");
    above[a].push_back(b);
    below[b].push_back(a);
    ++indeg[b];
  }
  // Kahn topological sort; the cover relation must be acyclic.
  topo_.reserve(n_);
  std::vector<int> queue;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int v = queue[q];
    topo_.push_back(v);
    for (int w : above[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  if (static_cast<int>(topo_.size()) != n_)
    throw std::invalid_argument("Poset: cover relation has a cycle");
  topo_pos_.assign(n_, 0);
  for (int i = 0; i < n_; ++i) topo_pos_[topo_[i]] = i;

  up_.assign(n_, boost::dynamic_bitset<>(n_));
  down_.assign(n_, boost::dynamic_bitset<>(n_));
  for (int i = n_ - 1; i >= 0; --i) {
    int v = topo_[i];
    up_[v].set(v);
    for (int w : above[v]) up_[v] |= up_[w];
  }
  for (int i = 0; i < n_; ++i) {
    int v = topo_[i];
    down_[v].set(v);
    for (int w : below[v]) down_[v] |= down_[w];
  }
}

bool Poset::leq(int a, int b) const { return down_[b].test(a); }

std::optional<int> Poset::meet(int a, int b) const {
  boost::dynamic_bitset<> common = down_[a] & down_[b];
  if (common.none()) return std::nullopt;
  // Candidate: the common lower bound latest in the linear extension; it is
  // the meet iff it dominates every other common lower bound.
  int best = -1;
  for (auto i = common.find_first(); i != boost::dynamic_bitset<>::npos;
       i = common.find_next(i))
    if (best < 0 || topo_pos_[i] > topo_pos_[best]) best = static_cast<int>(i);
  if ((common & ~down_[best]).any()) return std::nullopt;
  return best;
}

std::optional<int> Poset::join(int a, int b) const {
  boost::dynamic_bitset<> common = up_[a] & up_[b];
  if (common.none()) return std::nullopt;
  int best = -1;
  for (auto i = common.find_first(); i != boost::dynamic_bitset<>::npos;
       i = common.find_next(i))
    if (best < 0 || topo_pos_[i] < topo_pos_[best]) best = static_cast<int>(i);
  if ((common & ~up_[best]).any()) return std::nullopt;
  return best;
}

const std::vector<Int>& Poset::moebius_to(int top) const {
  if (top < 0 || top >= n_) throw std::invalid_argument("moebius_to: element out of range");
  std::scoped_lock lock(*mu_mutex_);
  auto it = mu_cache_.find(top);
  if (it != mu_cache_.end()) return it->second;
  std::vector<Int> mu(n_, Int(0));
  mu[top] = 1;
  // mu(z, top) = -sum_{z < w <= top} mu(w, top), scanning down the linear
  // extension so every needed value is already final.
  for (int i = topo_pos_[top] - 1; i >= 0; --i) {
    int z = topo_[i];
    if (!down_[top].test(z)) continue;
    boost::dynamic_bitset<> between = up_[z] & down_[top];
    Int s = 0;
    for (auto w = between.find_first(); w != boost::dynamic_bitset<>::npos;
         w = between.find_next(w))
      if (static_cast<int>(w) != z) s += mu[w];
    mu[z] = -s;
  }
  return mu_cache_.emplace(top, std::move(mu)).first->second;
}

Int Poset::moebius(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_)
    throw std::invalid_argument("moebius: element out of range");
  if (!leq(x, y)) return 0;
  return moebius_to(y)[x];
}

// ---------------------------------------------------------------------------
// Tamari and weak order instances

std::vector<Tree> tamari_covers(const Tree& t) {
  std::vector<Tree> out;
  if (t.is_leaf()) return out;
  Tree l = t.left(), r = t.right();
  if (!l.is_leaf()) out.push_back(wedge(l.left(), wedge(l.right(), r)));  // root rotation
  for (const Tree& c : tamari_covers(l)) out.push_back(wedge(c, r));
  for (const Tree& c : tamari_covers(r)) out.push_back(wedge(l, c));
  return out;
}

namespace {

std::unique_ptr<TreePoset> build_tamari(int n) {
  auto tp = std::make_unique<TreePoset>(TreePoset{n, enumerate_trees(n), {}, Poset(0, {})});
  for (int i = 0; i < static_cast<int>(tp->elements.size()); ++i)
    tp->index.emplace(tp->elements[i], i);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(tp->elements.size()); ++i)
    for (const Tree& c : tamari_covers(tp->elements[i]))
      edges.emplace_back(i, tp->index.at(c));
  tp->poset = Poset(static_cast<int>(tp->elements.size()), std::move(edges));
  return tp;
}

std::unique_ptr<PermPoset> build_bruhat(int n) {
  auto pp = std::make_unique<PermPoset>(PermPoset{n, all_permutations(n), {}, Poset(0, {})});
  for (int i = 0; i < static_cast<int>(pp->elements.size()); ++i)
    pp->index.emplace(pp->elements[i], i);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(pp->elements.size()); ++i)
    for (const Permutation& c : bruhat_covers(pp->elements[i]))
      edges.emplace_back(i, pp->index.at(c));
  pp->poset = Poset(static_cast<int>(pp->elements.size()), std::move(edges));
  return pp;
}

}  // namespace

const TreePoset& tamari_poset(int n, int bound) {
  if (n < 1) throw std::invalid_argument("tamari_poset: n must be positive");
  if (n > bound)
    throw resource_limit_error("tamari_poset: n exceeds the configured bound");
  static std::mutex m;
  static std::map<int, std::unique_ptr<TreePoset>> cache;
  std::scoped_lock lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_tamari(n)).first;
  return *it->second;
}

const PermPoset& bruhat_poset(int n, int bound) {
  if (n < 1) throw std::invalid_argument("bruhat_poset: n must be positive");
  if (n > bound)
    throw resource_limit_error("bruhat_poset: n exceeds the configured bound");
  static std::mutex m;
  static std::map<int, std::unique_ptr<PermPoset>> cache;
  std::scoped_lock lock(m);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_bruhat(n)).first;
  return *it->second;
}

bool bruhat_leq(const Permutation& sigma, const Permutation& tau, int bound) {
  if (sigma.size() != tau.size())
    throw std::invalid_argument("bruhat_leq: size mismatch");
  const PermPoset& pp = bruhat_poset(static_cast<int>(sigma.size()), bound);
  return pp.poset.leq(pp.index.at(sigma), pp.index.at(tau));
}

namespace {

const TreePoset& same_size_poset(const Tree& t, const Tree& w, int bound, const char* op) {
  if (t.leaves() != w.leaves())
    throw std::invalid_argument(std::string(op) + ": trees must have the same leaf count");
  return tamari_poset(t.leaves(), bound);
}

}  // namespace

// TODO: an O(n) bracket-vector comparison would avoid building the poset for
// degrees past the default bound; it must be cross-checked against the
// reachability order on small degrees before it can replace this.
bool tamari_leq(const Tree& t, const Tree& w, int bound) {
  const TreePoset& tp = same_size_poset(t, w, bound, "tamari_leq");
  return tp.poset.leq(tp.index.at(t), tp.index.at(w));
}

Tree tamari_meet(const Tree& t, const Tree& w, int bound) {
  const TreePoset& tp = same_size_poset(t, w, bound, "tamari_meet");
  auto m = tp.poset.meet(tp.index.at(t), tp.index.at(w));
  if (!m) throw std::logic_error("tamari_meet: lattice property violated");
  return tp.elements[*m];
}

Tree tamari_join(const Tree& t, const Tree& w, int bound) {
  const TreePoset& tp = same_size_poset(t, w, bound, "tamari_join");
  auto j = tp.poset.join(tp.index.at(t), tp.index.at(w));
  if (!j) throw std::logic_error("tamari_join: lattice property violated");
  return tp.elements[*j];
}

// ---------------------------------------------------------------------------
// Verification sweep

namespace {

struct LatticeTables {
  std::vector<std::vector<int>> meet, join;
  bool total = true;
};

LatticeTables lattice_tables(const Poset& p) {
  const int n = p.size();
  LatticeTables t;
  t.meet.assign(n, std::vector<int>(n, -1));
  t.join.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto m = p.meet(a, b), j = p.join(a, b);
      if (!m || !j) {
        t.total = false;
        continue;
      }
      t.meet[a][b] = t.meet[b][a] = *m;
      t.join[a][b] = t.join[b][a] = *j;
    }
  return t;
}

// meet/join associativity and absorption on one triple.
bool lattice_axioms_ok(const LatticeTables& t, int x, int y, int z) {
  const auto& m = t.meet;
  const auto& j = t.join;
  if (m[m[x][y]][z] != m[x][m[y][z]]) return false;
  if (j[j[x][y]][z] != j[x][j[y][z]]) return false;
  if (m[x][j[x][y]] != x) return false;
  if (j[x][m[x][y]] != x) return false;
  return true;
}

bool exhaustive_lattice_check(const Poset& p, Exec exec, std::string* fail) {
  LatticeTables t = lattice_tables(p);
  if (!t.total) {
    *fail = "meet or join missing";
    return false;
  }
  const int n = p.size();
  std::atomic<bool> ok{true};
  par_for(static_cast<std::size_t>(n), exec, [&](std::size_t x) {
    for (int y = 0; y < n && ok.load(std::memory_order_relaxed); ++y)
      for (int z = 0; z < n; ++z)
        if (!lattice_axioms_ok(t, static_cast<int>(x), y, z)) {
          ok = false;
          return;
        }
  });
  if (!ok) *fail = "axiom failure";
  return ok;
}

bool random_lattice_check(const Poset& p, int samples, unsigned seed, std::string* fail) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> d(0, p.size() - 1);
  for (int s = 0; s < samples; ++s) {
    int x = d(rng), y = d(rng), z = d(rng);
    auto mxy = p.meet(x, y), myz = p.meet(y, z);
    auto jxy = p.join(x, y), jyz = p.join(y, z);
    if (!mxy || !myz || !jxy || !jyz) {
      *fail = "meet or join missing";
      return false;
    }
    if (p.meet(*mxy, z) != p.meet(x, *myz) || p.join(*jxy, z) != p.join(x, *jyz) ||
        p.meet(x, *jxy) != std::optional<int>(x) || p.join(x, *mxy) != std::optional<int>(x)) {
      *fail = "axiom failure on sampled triple";
      return false;
    }
  }
  return true;
}

}  // namespace

Report verify_order(int max_tree_n, int max_perm_n, Exec exec) {
  return timed_report(
      "order", {{"max_tree_n", max_tree_n}, {"max_perm_n", max_perm_n}}, [&](Report& rep) {
        std::string why;
        // Lattice axioms, exhaustive up to 5 elements' degree, sampled above.
        for (int n = 2; n <= max_tree_n; ++n) {
          const TreePoset& tp = tamari_poset(n);
          bool ok = n <= 5 ? exhaustive_lattice_check(tp.poset, exec, &why)
                           : random_lattice_check(tp.poset, 1000, 7u * n, &why);
          rep.add("tamari(" + std::to_string(n) + ") lattice axioms", ok, ok ? "" : why);
        }
        for (int n = 2; n <= max_perm_n; ++n) {
          const PermPoset& pp = bruhat_poset(n);
          bool ok = n <= 5 ? exhaustive_lattice_check(pp.poset, exec, &why)
                           : random_lattice_check(pp.poset, 1000, 11u * n, &why);
          rep.add("weak-order(" + std::to_string(n) + ") lattice axioms", ok, ok ? "" : why);
        }

        // meet(| v t, | v w) = | v meet(t, w).
        {
          bool ok = true;
          std::string ce;
          for (int n = 2; n <= std::min(max_tree_n, 6) && ok; ++n)
            for (const Tree& t : enumerate_trees(n - 1))
              for (const Tree& w : enumerate_trees(n - 1)) {
                Tree lhs = tamari_meet(wedge(Tree::leaf(), t), wedge(Tree::leaf(), w));
                Tree rhs = wedge(Tree::leaf(), tamari_meet(t, w));
                if (lhs != rhs) {
                  ok = false;
                  ce = t.paren() + " , " + w.paren();
                  break;
                }
              }
          rep.add("meet compatible with left wedge by a leaf", ok, ce);
        }

        const int perm_n = std::min(max_perm_n, 6);
        // Image checks of the surjection onto trees.
        {
          bool ok = true;
          std::string ce;
          for (int n = 1; n <= perm_n && ok; ++n) {
            std::vector<Tree> image;
            for (const Permutation& s : all_permutations(n)) image.push_back(tonks(s));
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            std::vector<Tree> all = enumerate_trees(n + 1);
            std::sort(all.begin(), all.end());
            if (image != all) {
              ok = false;
              ce = "n=" + std::to_string(n);
            }
            Permutation id(n), rev(n);
            for (int i = 0; i < n; ++i) id[i] = i + 1, rev[i] = n - i;
            if (tonks(id) != comb_left(n + 1) || tonks(rev) != comb_right(n + 1)) {
              ok = false;
              ce = "extremal permutation image, n=" + std::to_string(n);
            }
          }
          rep.add("tree surjection: image and extremal values", ok, ce);
        }

        // Fibers of the surjection are weak-order intervals.
        {
          bool ok = true;
          std::string ce;
          for (int n = 1; n <= perm_n && ok; ++n) {
            const PermPoset& pp = bruhat_poset(n);
            std::map<Tree, boost::dynamic_bitset<>> fibers;
            for (int i = 0; i < static_cast<int>(pp.elements.size()); ++i) {
              auto [it, fresh] = fibers.try_emplace(
                  tonks(pp.elements[i]), boost::dynamic_bitset<>(pp.elements.size()));
              it->second.set(i);
            }
            for (const auto& [t, fib] : fibers) {
              int lo = -1, hi = -1;
              for (auto i = fib.find_first(); i != boost::dynamic_bitset<>::npos;
                   i = fib.find_next(i)) {
                bool minimal = true, maximal = true;
                for (auto j = fib.find_first(); j != boost::dynamic_bitset<>::npos;
                     j = fib.find_next(j)) {
                  if (j == i) continue;
                  if (pp.poset.leq(static_cast<int>(j), static_cast<int>(i))) minimal = false;
                  if (pp.poset.leq(static_cast<int>(i), static_cast<int>(j))) maximal = false;
                }
                if (minimal) lo = (lo == -1 ? static_cast<int>(i) : -2);
                if (maximal) hi = (hi == -1 ? static_cast<int>(i) : -2);
              }
              if (lo < 0 || hi < 0 ||
                  fib != (pp.poset.up_set(lo) & pp.poset.down_set(hi))) {
                ok = false;
                ce = "n=" + std::to_string(n) + " tree " + t.paren();
                break;
              }
            }
          }
          rep.add("tree surjection fibers are weak-order intervals", ok, ce);
        }

        // Order preservation on weak-order covers.
        {
          bool ok = true;
          std::string ce;
          for (int n = 1; n <= perm_n && ok; ++n)
            for (const Permutation& s : all_permutations(n)) {
              for (const Permutation& c : bruhat_covers(s))
                if (!tamari_leq(tonks(s), tonks(c))) {
                  ok = false;
                  ce = "n=" + std::to_string(n);
                  break;
                }
              if (!ok) break;
            }
          rep.add("tree surjection preserves order on covers", ok, ce);
        }

        // Support of mu(., top): nonzero only on {leaf wedge t} and
        // {leaf under t}.
        {
          bool ok = true;
          std::string ce;
          for (int n = 3; n <= std::min(max_tree_n, 6) && ok; ++n) {
            const TreePoset& tp = tamari_poset(n);
            const std::vector<Int>& mu = tp.poset.moebius_to(tp.index.at(comb_right(n)));
            for (int i = 0; i < static_cast<int>(tp.elements.size()); ++i) {
              const Tree& q = tp.elements[i];
              bool in_p1 = !q.is_leaf() && q.left().is_leaf();
              bool in_p2 = false;
              if (!q.is_leaf()) {
                // leaf under t = t with (leaf wedge leaf) grafted at leaf 1,
                // so the deepest node of the left spine must be (| |).
                Tree cur = q;
                while (!cur.left().is_leaf()) cur = cur.left();
                in_p2 = cur.right().is_leaf();
              }
              if (!in_p1 && !in_p2 && mu[i] != 0) {
                ok = false;
                ce = q.paren();
                break;
              }
            }
          }
          rep.add("mu(., top) supported on the two closed families", ok, ce);
        }
      });
}

}  // namespace tamari
