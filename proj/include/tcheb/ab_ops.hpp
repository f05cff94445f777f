#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tcheb/poly.hpp"

namespace tcheb {

/// Canonically expanded 2-fold tensor over the word basis; two tensor
/// expressions are equal iff their expansions coincide.
class Tensor2 {
 public:
  Tensor2() = default;

  void add_term(Word left, Word right, Int c) {
    if (c == 0) return;
    auto key = std::make_pair(std::move(left), std::move(right));
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Bilinear expansion of p (x) q.
  void add(const AbPoly& p, const AbPoly& q, Int scale = 1) {
    for (const auto& [wl, cl] : p.terms())
      for (const auto& [wr, cr] : q.terms())
        add_term(wl, wr, checked_mul(scale, checked_mul(cl, cr)));
  }

  const std::map<std::pair<Word, Word>, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Tensor2& x, const Tensor2& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Tensor2& x, const Tensor2& y) { return !(x == y); }

 private:
  std::map<std::pair<Word, Word>, Int> terms_;
};

/// k-fold analogue of Tensor2.
class TensorK {
 public:
  explicit TensorK(int arity) : arity_(arity) {}

  int arity() const { return arity_; }

  void add_term(std::vector<Word> factors, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(factors), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<std::vector<Word>, Int>& terms() const { return terms_; }

  friend bool operator==(const TensorK& x, const TensorK& y) {
    return x.arity_ == y.arity_ && x.terms_ == y.terms_;
  }
  friend bool operator!=(const TensorK& x, const TensorK& y) { return !(x == y); }

 private:
  int arity_;
  std::map<std::vector<Word>, Int> terms_;
};

/// Star involution: reverses every word.
AbPoly star(const AbPoly& u);
CdPoly star(const CdPoly& v);

/// Delete-one-letter coproduct Delta(u1...uk) = sum_i u1..u_{i-1} (x) u_{i+1}..uk.
Tensor2 coproduct(const AbPoly& u);

/// Iterated coproduct into k parts; k = 1 is the identity.
TensorK coproduct_k(const AbPoly& u, int k);

/// Commutative evaluation a -> a_val, b -> b_val.
Int eval(const AbPoly& u, Int a_val, Int b_val);

/// A is the algebra map with A(a) = 1, A(b) = 0.
Int map_A(const Word& w);
Int map_A(const AbPoly& u);

/// C satisfies C(1) = 2, C(a.u) = A(u) + C(u), C(b.u) = A(u); on ab-indexes
/// it returns the cardinality of the poset.
Int map_C(const Word& w);
Int map_C(const AbPoly& u);

/// (a-b)^n.
AbPoly e_power(int n);

/// kappa(u) = A(u) (a-b)^deg(u) and nu(u) = C(u) (a-b)^deg(u), applied
/// degree-wise on inhomogeneous input.
AbPoly kappa(const AbPoly& u);
AbPoly nu(const AbPoly& u);

/// H strips the leading letter, H* the trailing one; both send 1 to 0.
AbPoly map_H(const AbPoly& u);
AbPoly map_H_star(const AbPoly& u);

/// Restrictions to the cd-subalgebra: H(c.u) = 2u, H(d.u) = c.u, mirrored
/// for H*.
CdPoly map_H(const CdPoly& v);
CdPoly map_H_star(const CdPoly& v);

/// Replaces each (necessarily non-overlapping) occurrence of ab by 2d and
/// every remaining letter by c.
CdPoly omega(const AbPoly& u);

/// Expands c -> a+b, d -> ab+ba.
AbPoly cd_to_ab(const CdPoly& v);

/// Inverse change of basis where it exists. The cd-words of degree n expand
/// into a linearly independent family of ab-polynomials whose graded-lex
/// least words are distinct, so the linear system is triangular with unit
/// pivots; solving by back-substitution keeps everything in exact integers.
/// Throws NotCdExpressible when the residual cannot be matched.
CdPoly to_cd(const AbPoly& u);

/// True iff the coefficient of every word with k d's is divisible by 2^k.
bool is_c2d(const CdPoly& v);

}  // namespace tcheb
