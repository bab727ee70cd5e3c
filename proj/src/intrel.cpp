#include "tamari/intrel.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <stdexcept>

#include "tamari/bialg.hpp"
#include "tamari/errors.hpp"
#include "tamari/linalg.hpp"

namespace tamari {

IntRel::IntRel(int size, std::vector<std::pair<int, int>> a) : n(size), arcs(std::move(a)) {
  if (n < 0) throw std::invalid_argument("IntRel: negative size");
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  for (auto [i, j] : arcs)
    if (i < 1 || j < 1 || i > n || j > n || i == j)
      throw std::invalid_argument("IntRel: arc out of range");
}

bool IntRel::has(int i, int j) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(i, j));
}

std::string IntRel::str() const {
  std::string s = "{n=" + std::to_string(n);
  for (auto [i, j] : arcs) s += " " + std::to_string(i) + ">" + std::to_string(j);
  return s + "}";
}

bool alpha_valid(const AlphaMap& a) { return a.empty() || a.back() != RelOp::sq; }

std::string alpha_str(const AlphaMap& a) {
  if (a.empty()) return "u";  // the disjoint union marker
  std::string s;
  for (RelOp op : a) switch (op) {
      case RelOp::sq: s += 'u'; break;
      case RelOp::up: s += '^'; break;
      case RelOp::down: s += 'v'; break;
      case RelOp::updown: s += 'x'; break;
    }
  return s;
}

std::vector<AlphaMap> enumerate_alphas(int max_size) {
  std::vector<AlphaMap> out{{}};
  std::vector<AlphaMap> cur{{}};
  for (int len = 1; len <= max_size; ++len) {
    std::vector<AlphaMap> next;
    for (const AlphaMap& a : cur)
      for (RelOp op : {RelOp::sq, RelOp::up, RelOp::down, RelOp::updown}) {
        AlphaMap b = a;
        b.push_back(op);
        next.push_back(std::move(b));
      }
    for (const AlphaMap& a : next)
      if (alpha_valid(a)) out.push_back(a);
    cur = std::move(next);
  }
  return out;
}

IntRel restrict_rel(const IntRel& r, std::span<const int> positions) {
  std::vector<int> place(r.n + 1, 0);
  int k = 0;
  int prev = 0;
  for (int p : positions) {
    if (p < 1 || p > r.n || p <= prev)
      throw std::invalid_argument("restrict_rel: positions must be increasing and in range");
    place[p] = ++k;
    prev = p;
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [i, j] : r.arcs)
    if (place[i] && place[j]) arcs.emplace_back(place[i], place[j]);
  return IntRel(k, std::move(arcs));
}

IntRel apply_perm_rel(const Permutation& p, const IntRel& r) {
  if (static_cast<int>(p.size()) != r.n)
    throw std::invalid_argument("apply_perm_rel: size mismatch");
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(r.arcs.size());
  for (auto [i, j] : r.arcs) arcs.emplace_back(p[i - 1], p[j - 1]);
  return IntRel(r.n, std::move(arcs));
}

IntRel prod_basic(const IntRel& r, const IntRel& q, RelOp op) {
  std::vector<std::pair<int, int>> arcs = r.arcs;
  for (auto [i, j] : q.arcs) arcs.emplace_back(i + r.n, j + r.n);
  if (op == RelOp::up || op == RelOp::updown)
    for (int i = 1; i <= r.n; ++i)
      for (int j = r.n + 1; j <= r.n + q.n; ++j) arcs.emplace_back(i, j);
  if (op == RelOp::down || op == RelOp::updown)
    for (int i = r.n + 1; i <= r.n + q.n; ++i)
      for (int j = 1; j <= r.n; ++j) arcs.emplace_back(i, j);
  return IntRel(r.n + q.n, std::move(arcs));
}

IntRel prod_alpha(const IntRel& r, const IntRel& q, const AlphaMap& alpha) {
  if (!alpha_valid(alpha)) throw std::invalid_argument("prod_alpha: trailing disjoint-union letter");
  std::vector<std::pair<int, int>> arcs = r.arcs;
  for (auto [i, j] : q.arcs) arcs.emplace_back(i + r.n, j + r.n);
  // The size-0 relation is the unit: no last point, so no arcs to attach.
  const int lim = r.n == 0 ? 0 : std::min<int>(static_cast<int>(alpha.size()), q.n);
  for (int i = 1; i <= lim; ++i) {
    if (alpha[i - 1] == RelOp::up || alpha[i - 1] == RelOp::updown)
      arcs.emplace_back(r.n, r.n + i);
    if (alpha[i - 1] == RelOp::down || alpha[i - 1] == RelOp::updown)
      arcs.emplace_back(r.n + i, r.n);
  }
  return IntRel(r.n + q.n, std::move(arcs));
}

namespace {

template <class F>
RelElem bilinear_rel(const RelElem& x, const RelElem& y, F&& f) {
  RelElem out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) out.add(f(a, b), ca * cb);
  return out;
}

}  // namespace

RelElem prod_basic_elem(const RelElem& x, const RelElem& y, RelOp op) {
  return bilinear_rel(x, y, [&](const IntRel& a, const IntRel& b) {
    return prod_basic(a, b, op);
  });
}

RelElem prod_alpha_elem(const RelElem& x, const RelElem& y, const AlphaMap& alpha) {
  return bilinear_rel(x, y, [&](const IntRel& a, const IntRel& b) {
    return prod_alpha(a, b, alpha);
  });
}

RelSplitPair coprod_rel(const RelElem& x) {
  RelSplitPair out;
  for (const auto& [r, c] : x.terms()) {
    for (int i = 0; i <= r.n; ++i) {
      std::vector<int> pre(i), suf(r.n - i);
      for (int k = 0; k < i; ++k) pre[k] = k + 1;
      for (int k = 0; k < r.n - i; ++k) suf[k] = i + k + 1;
      out.add({restrict_rel(r, pre), restrict_rel(r, suf)}, c);
    }
  }
  return out;
}

RelSplitPair coprod_rel_red(const RelElem& x) {
  if (x.coeff(IntRel()) != 0)
    throw std::invalid_argument("coprod_rel_red: nonzero unit component");
  RelSplitPair out = coprod_rel(x);
  for (const auto& [r, c] : x.terms()) {
    out.add({IntRel(), r}, -c);
    out.add({r, IntRel()}, -c);
  }
  return out;
}

bool is_primitive(const RelElem& x) { return coprod_rel_red(x).is_zero(); }

namespace {

// All block shuffles: permutations of [n+m] increasing on the first n and
// the last m positions, enumerated by the image set of the first block.
std::vector<Permutation> shuffles(int n, int m) {
  std::vector<Permutation> out;
  std::vector<int> pick(n);
  for (int i = 0; i < n; ++i) pick[i] = i + 1;
  while (true) {
    Permutation s(n + m);
    std::vector<bool> used(n + m + 1, false);
    for (int i = 0; i < n; ++i) {
      s[i] = pick[i];
      used[pick[i]] = true;
    }
    int v = 1;
    for (int j = 0; j < m; ++j) {
      while (used[v]) ++v;
      s[n + j] = v;
      used[v] = true;
    }
    out.push_back(std::move(s));
    // next combination
    int i = n - 1;
    while (i >= 0 && pick[i] == m + i + 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

RelElem shuffle_prod(const IntRel& r, const IntRel& q, RelOp op) {
  IntRel base = prod_basic(r, q, op);
  RelElem out;
  for (const Permutation& s : shuffles(r.n, q.n)) out.add(apply_perm_rel(s, base), 1);
  return out;
}

RelElem shuffle_prod_elem(const RelElem& x, const RelElem& y, RelOp op) {
  RelElem out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      RelElem s = shuffle_prod(a, b, op);
      s *= ca * cb;
      out += s;
    }
  return out;
}

std::pair<AlphaMap, IntRel> left_factor(const IntRel& r) {
  if (r.n < 2) throw std::invalid_argument("left_factor: size must be at least 2");
  int p = 0;
  for (auto [i, j] : r.arcs) {
    if (i == 1) p = std::max(p, j - 1);
    if (j == 1) p = std::max(p, i - 1);
  }
  AlphaMap alpha(p);
  for (int i = 1; i <= p; ++i) {
    bool up = r.has(1, i + 1), down = r.has(i + 1, 1);
    alpha[i - 1] = up ? (down ? RelOp::updown : RelOp::up)
                      : (down ? RelOp::down : RelOp::sq);
  }
  std::vector<int> tail(r.n - 1);
  for (int i = 0; i < r.n - 1; ++i) tail[i] = i + 2;
  return {std::move(alpha), restrict_rel(r, tail)};
}

std::vector<IntRel> sqcup_factor(const IntRel& r) {
  // Cut points: positions c with no arc spanning {1..c} x {c+1..n}.
  std::vector<bool> crossed(r.n + 1, false);
  for (auto [i, j] : r.arcs)
    for (int c = std::min(i, j); c < std::max(i, j); ++c) crossed[c] = true;
  std::vector<IntRel> parts;
  int start = 1;
  for (int c = 1; c <= r.n; ++c) {
    if (c < r.n && crossed[c]) continue;
    std::vector<int> block(c - start + 1);
    for (int k = 0; k < c - start + 1; ++k) block[k] = start + k;
    parts.push_back(restrict_rel(r, block));
    start = c + 1;
  }
  return parts;
}

bool is_sqcup_irreducible(const IntRel& r) {
  return r.n >= 1 && sqcup_factor(r).size() == 1;
}

std::vector<IntRel> enumerate_rels(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_rels: negative size");
  if (n > 5) throw resource_limit_error("enumerate_rels: size exceeds the enumeration bound");
  std::vector<std::pair<int, int>> slots;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<IntRel> out;
  out.reserve(std::size_t{1} << slots.size());
  for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> arcs;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask & (std::size_t{1} << b)) arcs.push_back(slots[b]);
    out.emplace_back(n, std::move(arcs));
  }
  return out;
}

RelElem xi(const IntRel& r) {
  if (!is_sqcup_irreducible(r)) throw std::invalid_argument("xi: input must be irreducible");
  if (r.n == 1) return RelElem::single(r);
  auto [alpha, rest] = left_factor(r);
  // Irreducibility forces an arc at position 1, hence a nonempty word.
  const RelElem one = RelElem::single(rel_one());
  std::vector<IntRel> parts = sqcup_factor(rest);
  if (parts.size() == 1) {
    RelElem x = xi(rest);
    return prod_alpha_elem(one, x, alpha) - prod_basic_elem(one, x, RelOp::sq);
  }
  // rest = R_1 u ... u R_q: apply the primitive comb operator with the word
  // alpha on the first node and the disjoint union below.
  const int q = static_cast<int>(parts.size());
  RelAlgebra alg{{AlphaMap{}, alpha}};
  std::vector<int> colors(q, 0);
  colors[0] = 1;
  CTreeElem op = colored_moebius(wedge(Tree::leaf(), comb_left(q)), colors);
  std::vector<RelElem> args;
  args.push_back(one);
  for (const IntRel& p : parts) args.push_back(xi(p));
  return act(op, args, alg);
}

nlohmann::json rel_json(const IntRel& r) {
  nlohmann::json arcs = nlohmann::json::array();
  for (auto [i, j] : r.arcs) arcs.push_back(nlohmann::json::array({i, j}));
  return nlohmann::json{{"n", r.n}, {"arcs", arcs}};
}

IntRel rel_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> arcs;
  for (const auto& a : j.at("arcs"))
    arcs.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  return IntRel(n, std::move(arcs));
}

// ---------------------------------------------------------------------------
// Verification sweeps

namespace {

std::vector<IntRel> rels_up_to(int max_n) {
  std::vector<IntRel> out;
  for (int n = 1; n <= max_n; ++n)
    for (const IntRel& r : enumerate_rels(n)) out.push_back(r);
  return out;
}

bool unital_inf_law(const IntRel& p, const IntRel& q,
                    const std::function<IntRel(const IntRel&, const IntRel&)>& prod) {
  RelSplitPair want = coprod_rel(RelElem::single(prod(p, q)));
  RelSplitPair got;
  for (const auto& [ab, c] : coprod_rel(RelElem::single(p)).terms())
    got.add({ab.first, prod(ab.second, q)}, c);
  for (const auto& [ab, c] : coprod_rel(RelElem::single(q)).terms())
    got.add({prod(p, ab.first), ab.second}, c);
  got.add({p, q}, -1);
  return got == want;
}

}  // namespace

Report verify_intrel(int max_gen_n, Exec exec) {
  return timed_report("integer-relations", {{"max_gen_n", max_gen_n}}, [&](Report& rep) {
    // Counts by enumeration and deduplication.
    {
      bool ok = true;
      long expected = 1;
      for (int n = 1; n <= 4; ++n) {
        expected = 1;
        for (int k = 0; k < n * (n - 1) / 2; ++k) expected *= 4;
        std::vector<IntRel> all = enumerate_rels(n);
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        if (static_cast<long>(all.size()) != expected) ok = false;
      }
      rep.add("relation counts 4^(n(n-1)/2) for n <= 4", ok);
    }

    const std::vector<IntRel> small = rels_up_to(2);
    const std::array<RelOp, 4> ops{RelOp::sq, RelOp::up, RelOp::down, RelOp::updown};

    // Associativity of the four block products.
    {
      bool ok = true;
      std::string ce;
      for (RelOp op : ops)
        for (const IntRel& x : small)
          for (const IntRel& y : small)
            for (const IntRel& z : small)
              if (!(prod_basic(prod_basic(x, y, op), z, op) ==
                    prod_basic(x, prod_basic(y, z, op), op))) {
                ok = false;
                ce = x.str() + y.str() + z.str();
              }
      // and a few larger randomized instances
      std::mt19937 rng(12345);
      const std::vector<IntRel> size3 = enumerate_rels(3);
      std::uniform_int_distribution<std::size_t> d(0, size3.size() - 1);
      for (int it = 0; it < 200 && ok; ++it) {
        const IntRel &x = size3[d(rng)], &y = size3[d(rng)], &z = size3[d(rng)];
        RelOp op = ops[it % 4];
        if (!(prod_basic(prod_basic(x, y, op), z, op) ==
              prod_basic(x, prod_basic(y, z, op), op)))
          ok = false;
      }
      rep.add("block products associative", ok, ce);
    }

    // Mixed associativity fails: exhibit a counterexample.
    {
      bool found = false;
      for (RelOp a : ops)
        for (RelOp b : ops) {
          if (a == b) continue;
          const IntRel one = rel_one();
          if (!(prod_basic(prod_basic(one, one, a), one, b) ==
                prod_basic(one, prod_basic(one, one, b), a)))
            found = true;
        }
      rep.add("mixed associativity counterexample exists", found);
    }

    // Unital infinitesimal law for the block products and the graded words.
    {
      bool ok = true;
      std::string ce;
      for (RelOp op : ops)
        for (const IntRel& p : small)
          for (const IntRel& q : small)
            if (!unital_inf_law(p, q, [&](const IntRel& a, const IntRel& b) {
                  return prod_basic(a, b, op);
                })) {
              ok = false;
              ce = p.str() + " . " + q.str();
            }
      rep.add("unital infinitesimal law: block products", ok, ce);

      ok = true;
      ce.clear();
      const std::vector<AlphaMap> alphas = enumerate_alphas(3);
      std::vector<char> good(alphas.size(), 1);
      par_for(alphas.size(), exec, [&](std::size_t ai) {
        for (const IntRel& p : small)
          for (const IntRel& q : small)
            if (!unital_inf_law(p, q, [&](const IntRel& a, const IntRel& b) {
                  return prod_alpha(a, b, alphas[ai]);
                }))
              good[ai] = 0;
      });
      for (std::size_t ai = 0; ai < alphas.size(); ++ai)
        if (!good[ai]) {
          ok = false;
          ce = "alpha=" + alpha_str(alphas[ai]);
          break;
        }
      rep.add("unital infinitesimal law: graded word products", ok, ce);
    }

    // Hopf compatibility of the shuffled products.
    {
      bool ok = true;
      std::string ce;
      for (RelOp op : ops)
        for (const IntRel& p : small)
          for (const IntRel& q : small) {
            RelSplitPair lhs = coprod_rel(shuffle_prod(p, q, op));
            RelSplitPair rhs;
            for (const auto& [ab, c] : coprod_rel(RelElem::single(p)).terms())
              for (const auto& [cd, cc] : coprod_rel(RelElem::single(q)).terms()) {
                RelElem lefts = shuffle_prod(ab.first, cd.first, op);
                RelElem rights = shuffle_prod(ab.second, cd.second, op);
                for (const auto& [l, cl] : lefts.terms())
                  for (const auto& [rr, cr] : rights.terms())
                    rhs.add({l, rr}, c * cc * cl * cr);
              }
            if (lhs != rhs) {
              ok = false;
              ce = p.str() + " . " + q.str();
            }
          }
      rep.add("shuffled products are coproduct homomorphisms", ok, ce);
    }

    // Bounded associativity of the word products: equality for all gamma and
    // P iff the word fits inside the middle factor.
    {
      bool ok = true;
      std::string ce;
      const std::vector<AlphaMap> alphas = enumerate_alphas(3);
      for (const AlphaMap& alpha : alphas) {
        for (const IntRel& q : small) {
          bool always = true, ever_failed = false;
          for (const AlphaMap& gamma : alphas)
            for (const IntRel& r : small)
              for (const IntRel& p : small) {
                bool eq = prod_alpha(prod_alpha(r, q, alpha), p, gamma) ==
                          prod_alpha(r, prod_alpha(q, p, gamma), alpha);
                always = always && eq;
                ever_failed = ever_failed || !eq;
              }
          bool fits = static_cast<int>(alpha.size()) <= q.n;
          if (fits != always || fits == ever_failed) {
            ok = false;
            ce = "alpha=" + alpha_str(alpha) + " q=" + q.str();
          }
        }
        if (!ok) break;
      }
      rep.add("bounded associativity of word products (iff sweep)", ok, ce);
    }

    // Generation round trip: unique canonical word per relation.
    for (int n = 2; n <= max_gen_n; ++n) {
      bool ok = true;
      std::string ce;
      std::vector<std::vector<AlphaMap>> words;
      const std::vector<IntRel> all = enumerate_rels(n);
      for (const IntRel& r : all) {
        std::vector<AlphaMap> w;
        IntRel cur = r;
        while (cur.n >= 2) {
          auto [alpha, rest] = left_factor(cur);
          if (static_cast<int>(alpha.size()) > cur.n - 1) {
            ok = false;
            ce = r.str() + " (word too long)";
          }
          w.push_back(alpha);
          cur = rest;
        }
        // reconstruct right-to-left
        IntRel back = rel_one();
        for (auto it = w.rbegin(); it != w.rend(); ++it)
          back = prod_alpha(rel_one(), back, *it);
        if (!(back == r)) {
          ok = false;
          ce = r.str();
        }
        words.push_back(std::move(w));
      }
      std::sort(words.begin(), words.end());
      if (std::adjacent_find(words.begin(), words.end()) != words.end()) {
        ok = false;
        ce = "duplicate canonical word";
      }
      rep.add("generation round trip, size " + std::to_string(n), ok, ce);
    }

    // Irreducibility characterization through the canonical word.
    {
      bool ok = true;
      std::string ce;
      for (int n = 1; n <= 3; ++n)
        for (const IntRel& r : enumerate_rels(n)) {
          std::vector<AlphaMap> w;  // w[0] = alpha_{n-1}, ..., w[n-2] = alpha_1
          IntRel cur = r;
          while (cur.n >= 2) {
            w.push_back(left_factor(cur).first);
            cur = left_factor(cur).second;
          }
          // alpha_i := w[n-1-i], 1 <= i <= n-1.  Irreducible iff for every
          // i either alpha_i is a nonempty word or some j > i has
          // s(alpha_j) > j - i.
          bool chr = true;
          for (int i = 1; i <= n - 1; ++i) {
            bool okp = !w[n - 1 - i].empty();
            for (int j = i + 1; j <= n - 1 && !okp; ++j)
              okp = static_cast<int>(w[n - 1 - j].size()) > j - i;
            chr = chr && okp;
          }
          if (chr != is_sqcup_irreducible(r)) {
            ok = false;
            ce = r.str();
          }
        }
      rep.add("irreducibility characterization via canonical words", ok, ce);
    }

    // Irreducible counts against the free-monoid inversion of the totals.
    {
      std::vector<long> total(4, 0), irr(4, 0), inv(4, 0);
      for (int n = 1; n <= 3; ++n) {
        for (const IntRel& r : enumerate_rels(n)) {
          ++total[n];
          if (is_sqcup_irreducible(r)) ++irr[n];
        }
      }
      for (int n = 1; n <= 3; ++n) {
        long s = total[n];
        for (int k = 1; k < n; ++k) s -= inv[k] * total[n - k];
        inv[n] = s;
      }
      rep.add("irreducible counts match the monoid inversion (1, 3, 57)",
              irr[1] == inv[1] && irr[2] == inv[2] && irr[3] == inv[3] && irr[1] == 1 &&
                  irr[2] == 3 && irr[3] == 57);
    }

    // Restriction against disjoint union on random block pairs.
    {
      std::mt19937 rng(999);
      const std::vector<IntRel> size3 = enumerate_rels(3);
      std::uniform_int_distribution<std::size_t> d(0, size3.size() - 1);
      bool ok = true;
      for (int it = 0; it < 200; ++it) {
        const IntRel &a = size3[d(rng)], &b = size3[d(rng)];
        IntRel u = prod_basic(a, b, RelOp::sq);
        std::vector<int> left{1, 2, 3}, right{4, 5, 6};
        if (!(restrict_rel(u, left) == a) || !(restrict_rel(u, right) == b)) ok = false;
        std::vector<int> all{1, 2, 3, 4, 5, 6};
        if (!(restrict_rel(u, all) == u)) ok = false;
      }
      rep.add("restriction compatible with disjoint union", ok);
    }
  });
}

namespace {

bool xi_triangular(const IntRel& r, const RelElem& x, std::string* why) {
  if (x.coeff(r) != 1) {
    *why = r.str() + " leading coefficient";
    return false;
  }
  for (const auto& [p, c] : x.terms()) {
    if (p == r) continue;
    if (p.n != r.n || p.arcs.size() >= r.arcs.size() ||
        !std::includes(r.arcs.begin(), r.arcs.end(), p.arcs.begin(), p.arcs.end())) {
      *why = r.str() + " term " + p.str();
      return false;
    }
  }
  return true;
}

int rel_kernel_dim(int n) {
  const std::vector<IntRel> basis = enumerate_rels(n);
  std::map<IntRel, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  std::map<std::pair<IntRel, IntRel>, std::size_t> rows;
  std::vector<RelSplitPair> red(basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    red[c] = coprod_rel_red(RelElem::single(basis[c]));
    for (const auto& [ab, coef] : red[c].terms()) rows.try_emplace(ab, 0);
  }
  std::size_t r = 0;
  for (auto& [k, v] : rows) v = r++;
  IntMatrix m(rows.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [ab, coef] : red[c].terms()) m.at(rows.at(ab), c) = coef;
  return static_cast<int>(basis.size() - rank(std::move(m)));
}

}  // namespace

Report verify_xi(int sample4, bool full_kernel4, Exec exec) {
  return timed_report(
      "xi-basis", {{"sample4", sample4}, {"full_kernel4", full_kernel4}}, [&](Report& rep) {
        for (int n = 1; n <= 3; ++n) {
          std::vector<IntRel> irr;
          for (const IntRel& r : enumerate_rels(n))
            if (is_sqcup_irreducible(r)) irr.push_back(r);

          std::vector<RelElem> images(irr.size());
          std::vector<std::string> bad(irr.size());
          par_for(irr.size(), exec, [&](std::size_t i) {
            images[i] = xi(irr[i]);
            if (!is_primitive(images[i])) {
              bad[i] = irr[i].str() + " not primitive";
              return;
            }
            std::string why;
            if (!xi_triangular(irr[i], images[i], &why)) bad[i] = why;
          });
          std::string first;
          for (const std::string& s : bad)
            if (!s.empty()) {
              first = s;
              break;
            }
          rep.add("size " + std::to_string(n) + ": images primitive and unitriangular",
                  first.empty(), first);

          // Linear independence and kernel dimension.
          const std::vector<IntRel> basis = enumerate_rels(n);
          std::map<IntRel, std::size_t> index;
          for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
          IntMatrix m(images.size(), basis.size());
          for (std::size_t i = 0; i < images.size(); ++i)
            for (const auto& [b, c] : images[i].terms()) m.at(i, index.at(b)) = c;
          bool indep = rank(std::move(m)) == images.size();
          int kd = rel_kernel_dim(n);
          rep.add("size " + std::to_string(n) + ": " + std::to_string(images.size()) +
                      " independent images = kernel dim " + std::to_string(kd),
                  indep && kd == static_cast<int>(images.size()));
        }

        // Size 4, sampled.
        {
          std::mt19937 rng(424242);
          const std::vector<IntRel> all = enumerate_rels(4);
          std::uniform_int_distribution<std::size_t> d(0, all.size() - 1);
          std::vector<IntRel> picks;
          while (static_cast<int>(picks.size()) < sample4) {
            const IntRel& r = all[d(rng)];
            if (is_sqcup_irreducible(r)) picks.push_back(r);
          }
          std::vector<std::string> bad(picks.size());
          par_for(picks.size(), exec, [&](std::size_t i) {
            RelElem x = xi(picks[i]);
            if (!is_primitive(x)) {
              bad[i] = picks[i].str() + " not primitive";
              return;
            }
            std::string why;
            if (!xi_triangular(picks[i], x, &why)) bad[i] = why;
          });
          std::string first;
          for (const std::string& s : bad)
            if (!s.empty()) {
              first = s;
              break;
            }
          rep.add("size 4: sampled images primitive and unitriangular", first.empty(), first);
        }

        if (full_kernel4) {
          long irr4 = 0;
          for (const IntRel& r : enumerate_rels(4))
            if (is_sqcup_irreducible(r)) ++irr4;
          int kd = rel_kernel_dim(4);
          rep.add("size 4: kernel dim " + std::to_string(kd) + " = irreducible count " +
                      std::to_string(irr4),
                  kd == irr4);
        }
      });
}

Report verify_rel_operators(int sample4, Exec exec) {
  return timed_report("relation-operators", {{"sample4", sample4}}, [&](Report& rep) {
    const std::vector<AlphaMap> alphas = enumerate_alphas(3);
    const std::vector<IntRel> small = rels_up_to(2);

    // Right-comb Moebius operators on relation tuples: vanishing when some
    // interior word fits, unitriangular expansion otherwise.
    auto eval_comb = [&](std::span<const AlphaMap> colors_words,
                         std::span<const IntRel> args_rel) -> RelElem {
      const int nf = static_cast<int>(args_rel.size());
      RelAlgebra alg;
      std::vector<int> colors;
      for (const AlphaMap& a : colors_words) {
        colors.push_back(static_cast<int>(alg.palette.size()));
        alg.palette.push_back(a);
      }
      CTreeElem op = colored_moebius(comb_right(nf), colors);
      std::vector<RelElem> args;
      for (const IntRel& r : args_rel) args.push_back(RelElem::single(r));
      return act(op, args, alg);
    };
    auto leading = [&](std::span<const AlphaMap> words, std::span<const IntRel> rels) {
      // R = R_nf *_{a_{nf-1}} (R_{nf-1} *_{a_{nf-2}} (... *_{a_1} R_1))
      IntRel acc = rels.back();
      for (int i = static_cast<int>(rels.size()) - 2; i >= 0; --i)
        acc = prod_alpha(rels[i], acc, words[i]);
      return acc;
    };
    auto check_instance = [&](std::span<const AlphaMap> words,
                              std::span<const IntRel> rels) -> std::string {
      const int nf = static_cast<int>(rels.size());
      bool vanishes = false;   // some interior word fits inside its factor
      bool in_range = true;    // every interior word fits inside the product
                               // it is applied to, as in the canonical form
      int below = rels[nf - 1].n;
      for (int i = 2; i <= nf - 1; ++i) {
        const int s = static_cast<int>(words[nf - 1 - i].size());
        if (s <= rels[nf - i].n) vanishes = true;
        below += rels[nf - i].n;
        if (s > below) in_range = false;
      }
      if (vanishes) {
        if (!eval_comb(words, rels).is_zero()) return "expected vanishing";
        return {};
      }
      if (!in_range) return {};  // outside the unitriangularity hypotheses
      RelElem v = eval_comb(words, rels);
      IntRel lead = leading(words, rels);
      if (v.coeff(lead) != 1) return "leading coefficient of " + lead.str();
      for (const auto& [p, c] : v.terms()) {
        if (p == lead) continue;
        if (c != 1 && c != -1) return "coefficient outside {-1,0,1}";
        if (p.n != lead.n || p.arcs.size() >= lead.arcs.size() ||
            !std::includes(lead.arcs.begin(), lead.arcs.end(), p.arcs.begin(),
                           p.arcs.end()))
          return "term not strictly below " + lead.str();
      }
      return {};
    };

    {
      // Exhaustive with three factors.
      std::vector<char> good(alphas.size(), 1);
      std::vector<std::string> why(alphas.size());
      par_for(alphas.size(), exec, [&](std::size_t a2) {
        for (const AlphaMap& a1 : alphas)
          for (const IntRel& r3 : small)
            for (const IntRel& r2 : small)
              for (const IntRel& r1 : small) {
                std::array<AlphaMap, 2> words{alphas[a2], a1};
                std::array<IntRel, 3> rels{r3, r2, r1};
                std::string w = check_instance(words, rels);
                if (!w.empty()) {
                  good[a2] = 0;
                  why[a2] = w;
                  return;
                }
              }
      });
      bool ok = true;
      std::string ce;
      for (std::size_t i = 0; i < alphas.size(); ++i)
        if (!good[i]) {
          ok = false;
          ce = "alpha2=" + alpha_str(alphas[i]) + ": " + why[i];
          break;
        }
      rep.add("three factors, exhaustive", ok, ce);
    }

    {
      // Four factors, sampled.
      std::mt19937 rng(77);
      std::uniform_int_distribution<std::size_t> da(0, alphas.size() - 1);
      std::uniform_int_distribution<std::size_t> dr(0, small.size() - 1);
      bool ok = true;
      std::string ce;
      for (int it = 0; it < sample4 && ok; ++it) {
        std::array<AlphaMap, 3> words{alphas[da(rng)], alphas[da(rng)], alphas[da(rng)]};
        std::array<IntRel, 4> rels{small[dr(rng)], small[dr(rng)], small[dr(rng)],
                                   small[dr(rng)]};
        std::string w = check_instance(words, rels);
        if (!w.empty()) {
          ok = false;
          ce = w;
        }
      }
      rep.add("four factors, sampled", ok, ce);
    }
  });
}

}  // namespace tamari
