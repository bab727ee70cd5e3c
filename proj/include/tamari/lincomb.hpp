#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "tamari/bigint.hpp"

namespace tamari {

/// Finite formal sum of basis elements `B` with exact integer coefficients.
///
/// Invariants: zero coefficients are never stored, so equality of the
/// underlying maps is coefficientwise equality of the elements.  `B` must be
/// totally ordered by `operator<`; iteration order is deterministic.
template <class B>
class LinComb {
 public:
  using Terms = std::map<B, Int>;
  using const_iterator = typename Terms::const_iterator;

  LinComb() = default;

  static LinComb single(B b, Int c = 1) {
    LinComb x;
    x.add(std::move(b), std::move(c));
    return x;
  }

  void add(B b, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(b), std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
  }
  LinComb& operator*=(const Int& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c *= k;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Int& k, LinComb a) { return a *= k; }
  LinComb operator-() const {
    LinComb r = *this;
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }

  /// Coefficient of `b` (zero if absent).
  Int coeff(const B& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Int(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const& { return terms_; }
  /// Value overload so that iterating `f(...).terms()` over a temporary is
  /// safe: the map is moved out and lifetime-extended by the loop.
  Terms terms() && { return std::move(terms_); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

  /// Applies `f : B -> LinComb<B2>` linearly.
  template <class F>
  auto map_basis(F&& f) const {
    using Out = decltype(f(std::declval<const B&>()));
    Out r;
    for (const auto& [b, c] : terms_) {
      Out fb = f(b);
      fb *= c;
      r += fb;
    }
    return r;
  }

 private:
  Terms terms_;
};

/// Bilinear tensor pairing: (sum a_i x_i) tensor (sum b_j y_j) =
/// sum a_i b_j (x_i, y_j).
template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& x, const LinComb<B>& y) {
  LinComb<std::pair<A, B>> r;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) r.add({a, b}, ca * cb);
  return r;
}

}  // namespace tamari
