#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "tamari/bigint.hpp"
#include "tamari/parallel.hpp"
#include "tamari/report.hpp"
#include "tamari/tree.hpp"

namespace tamari {

/// Largest n for which Tamari/weak-order posets are built by default;
/// Catalan(9) = 4862 trees.  Exceeding a bound raises resource_limit_error.
inline constexpr int kDefaultTamariBound = 10;
inline constexpr int kDefaultBruhatBound = 7;

/// Permutation of [n] as its image sequence (1-based values).
using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p);
std::vector<Permutation> all_permutations(int n);  // lexicographic

/// Unique permutation with the same relative order as the given pairwise
/// distinct entries.  Throws std::invalid_argument on repeated entries.
Permutation standardize(std::span<const int> word);
/// Restriction sigma^S: standardization of sigma on positions S (1-based,
/// strictly increasing).
Permutation restrict_perm(const Permutation& sigma, std::span<const int> positions);

/// Covers of sigma in the weak order: tau = transposition(i, i+1) * sigma
/// for each i whose value i appears before i+1 in sigma.
std::vector<Permutation> bruhat_covers(const Permutation& sigma);
bool bruhat_leq(const Permutation& sigma, const Permutation& tau,
                int bound = kDefaultBruhatBound);

/// Order-related surjection from permutations of n onto trees with n+1
/// leaves: recursive split at the position of the maximal value.
Tree tonks(const Permutation& sigma);

/// Finite poset given by its cover relation on elements 0..n-1.
///
/// Construction validates acyclicity and precomputes the reachability
/// closure; after that the object is immutable and safe to share across
/// threads (the per-top Moebius cache is internally synchronized).
class Poset {
 public:
  Poset(int n, std::vector<std::pair<int, int>> cover_edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& cover_edges() const { return covers_; }

  bool leq(int a, int b) const;

  /// Greatest lower / least upper bound.  Returns nullopt when the pair has
  /// none (i.e. the poset is not a lattice at this pair).
  std::optional<int> meet(int a, int b) const;
  std::optional<int> join(int a, int b) const;

  /// Moebius function mu(x, y); zero unless x <= y.  Values are cached per
  /// top element y.
  Int moebius(int x, int y) const;
  /// mu(x, top) for every x, as one vector.
  const std::vector<Int>& moebius_to(int top) const;

  /// Elements below / above x as bitsets over element indices.
  const boost::dynamic_bitset<>& down_set(int x) const { return down_[x]; }
  const boost::dynamic_bitset<>& up_set(int x) const { return up_[x]; }

 private:
  int n_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> topo_;      // linear extension, bottom to top
  std::vector<int> topo_pos_;  // inverse of topo_
  std::vector<boost::dynamic_bitset<>> up_, down_;
  mutable std::unique_ptr<std::mutex> mu_mutex_ = std::make_unique<std::mutex>();
  mutable std::map<int, std::vector<Int>> mu_cache_;
};

/// A poset whose elements are the trees with n leaves, in canonical order.
struct TreePoset {
  int n = 0;
  std::vector<Tree> elements;
  std::map<Tree, int> index;
  Poset poset;
};

/// Trees obtained from t by one left-to-right rotation at one internal node.
std::vector<Tree> tamari_covers(const Tree& t);

/// Tamari lattice on trees with n leaves (cached per n, constructed once).
/// Throws resource_limit_error for n > bound.
const TreePoset& tamari_poset(int n, int bound = kDefaultTamariBound);

bool tamari_leq(const Tree& t, const Tree& w, int bound = kDefaultTamariBound);
Tree tamari_meet(const Tree& t, const Tree& w, int bound = kDefaultTamariBound);
Tree tamari_join(const Tree& t, const Tree& w, int bound = kDefaultTamariBound);

/// Weak order on permutations of n (cached per n).
struct PermPoset {
  int n = 0;
  std::vector<Permutation> elements;
  std::map<Permutation, int> index;
  Poset poset;
};
const PermPoset& bruhat_poset(int n, int bound = kDefaultBruhatBound);

/// Order-layer verification sweep: lattice axioms for both orders, fibers of
/// the permutations-to-trees surjection as weak-order intervals, its
/// order-preservation on covers, and the support pattern of mu(., top) on
/// the Tamari lattice.
Report verify_order(int max_tree_n, int max_perm_n, Exec exec = Exec::parallel);

}  // namespace tamari
