#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcheb/ab_index.hpp"
#include "tcheb/poly.hpp"
#include "tcheb/poset.hpp"
#include "tcheb/transforms.hpp"

namespace tcheb {

/// Composition: sequence of positive integers; empty = the unit index.
using Composition = std::vector<int>;

inline int weight(const Composition& a) {
  int w = 0;
  for (int p : a) w += p;
  return w;
}

/// weight first, then lexicographic
struct CompGradedLess {
  bool operator()(const Composition& x, const Composition& y) const {
    int wx = weight(x), wy = weight(y);
    if (wx != wy) return wx < wy;
    return x < y;
  }
};

/// Sparse integer combination of monomial quasisymmetric functions M_alpha.
class QSymElem {
 public:
  using TermMap = std::map<Composition, Int, CompGradedLess>;

  QSymElem() = default;
  static QSymElem unit() { return basis({}); }
  static QSymElem basis(Composition a, Int c = 1) {
    QSymElem f;
    f.add_term(std::move(a), c);
    return f;
  }

  void add_term(Composition a, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(a), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coeff(const Composition& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  int degree() const { return terms_.empty() ? -1 : weight(terms_.rbegin()->first); }

  QSymElem& operator+=(const QSymElem& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
  }
  QSymElem& operator-=(const QSymElem& o) {
    for (const auto& [a, c] : o.terms_) add_term(a, checked_neg(c));
    return *this;
  }
  QSymElem& operator*=(Int k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [a, c] : terms_) c = checked_mul(c, k);
    return *this;
  }
  friend QSymElem operator+(QSymElem x, const QSymElem& y) { return x += y; }
  friend QSymElem operator-(QSymElem x, const QSymElem& y) { return x -= y; }
  friend QSymElem operator*(QSymElem x, Int k) { return x *= k; }
  friend bool operator==(const QSymElem& x, const QSymElem& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const QSymElem& x, const QSymElem& y) { return !(x == y); }

 private:
  TermMap terms_;
};

/// Basis element s^p M_alpha of BQSym = k[s] (x) QSym, graded by p + |alpha|.
using BKey = std::pair<int, Composition>;

struct BKeyGradedLess {
  bool operator()(const BKey& x, const BKey& y) const {
    int dx = x.first + weight(x.second), dy = y.first + weight(y.second);
    if (dx != dy) return dx < dy;
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  }
};

class BQSymElem {
 public:
  using TermMap = std::map<BKey, Int, BKeyGradedLess>;

  BQSymElem() = default;
  static BQSymElem unit() { return basis(0, {}); }
  static BQSymElem basis(int p, Composition a, Int c = 1) {
    BQSymElem f;
    f.add_term(p, std::move(a), c);
    return f;
  }

  void add_term(int p, Composition a, Int c) {
    if (c == 0) return;
    BKey key{p, std::move(a)};
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Int coeff(int p, const Composition& a) const {
    auto it = terms_.find({p, a});
    return it == terms_.end() ? 0 : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  BQSymElem& operator+=(const BQSymElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
  }
  BQSymElem& operator-=(const BQSymElem& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, checked_neg(c));
    return *this;
  }
  friend BQSymElem operator+(BQSymElem x, const BQSymElem& y) { return x += y; }
  friend BQSymElem operator-(BQSymElem x, const BQSymElem& y) { return x -= y; }
  friend bool operator==(const BQSymElem& x, const BQSymElem& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const BQSymElem& x, const BQSymElem& y) { return !(x == y); }

 private:
  TermMap terms_;
};

/// Canonically expanded tensors for the coproduct laws.
using QSymTensor = std::map<std::pair<Composition, Composition>, Int>;
using BQSymTensor = std::map<std::pair<BKey, Composition>, Int>;

void tensor_add(QSymTensor& t, const QSymElem& l, const QSymElem& r, Int scale = 1);
void tensor_add(BQSymTensor& t, const BQSymElem& l, const QSymElem& r, Int scale = 1);

/// Quasi-shuffle (overlapping shuffle) product on the monomial basis.
QSymElem qsym_product(const QSymElem& f, const QSymElem& g);

/// Deconcatenation coproduct on the monomial basis.
QSymTensor qsym_coproduct(const QSymElem& f);

/// s-exponents add, compositions quasi-shuffle.
BQSymElem bqsym_product(const BQSymElem& f, const BQSymElem& g);

/// Delta(s^p f) = sum s^p f_(1) (x) f_(2) with the QSym coproduct on f.
BQSymTensor bqsym_coproduct(const BQSymElem& f);

/// gamma((a-b)^{p1-1} b (a-b)^{p2-1} ... b (a-b)^{pk-1}) = M_{(p1..pk)};
/// an isomorphism onto QSym without constant term.
QSymElem gamma(const AbPoly& u);

/// Inverse of gamma; the empty composition has no preimage.
AbPoly gamma_inv(const QSymElem& f);

/// gamma_B((a-b)^p b (a-b)^{p1-1} ...) = s^p M_{(p1..pk)}; a degree-graded
/// isomorphism onto BQSym (an ab-word of degree n lands in total degree n).
BQSymElem gamma_B(const AbPoly& u);
AbPoly gamma_B_inv(const BQSymElem& f);

/// Quasisymmetric function of a poset: F(point) = 1, else gamma(Psi(P)).
QSymElem F(const Poset& p);

/// Type B quasisymmetric function, gamma_B(Psi(P)); requires rank >= 1.
BQSymElem F_B(const Poset& p);

/// Same invariant through the interval sum over 0 < x <= 1 of
/// s^{rank(x)-1} F([x, 1]); the two routes are compared in tests.
BQSymElem F_B_interval_form(const Poset& p);

/// Mixing operators carried across the isomorphisms:
/// M(u,v) = gamma^{-1}(gamma(u) gamma(v)) realizes Psi(P x Q),
/// N(u,v) = gamma_B^{-1}(gamma_B(u) gamma_B(v)) realizes Psi(P <> Q),
/// N*(u,v) = N(u*, v*)*.
AbPoly mix_M(const AbPoly& u, const AbPoly& v);
AbPoly mix_N(const AbPoly& u, const AbPoly& v);
AbPoly mix_N_star(const AbPoly& u, const AbPoly& v);

/// U, g-tilde and g conjugated onto QSym / BQSym; the QSym versions fix the
/// unit and act through gamma on the rest.
QSymElem U_qsym(const QSymElem& f);
QSymElem gtilde_qsym(const Character& g, const QSymElem& f);
BQSymElem g_bqsym(const Character& g, const BQSymElem& f);

/// Text syntax: `M[2,1]`, `s^3*M[1]`, integer coefficients, +/- separators.
std::string to_string(const QSymElem& f);
std::string to_string(const BQSymElem& f);
QSymElem parse_qsym(const std::string& text);
BQSymElem parse_bqsym(const std::string& text);

}  // namespace tcheb
