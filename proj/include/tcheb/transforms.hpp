#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tcheb/ab_ops.hpp"
#include "tcheb/poly.hpp"

namespace tcheb {

/// Tchebyshev transform of the first kind on polynomials,
///   T(u) = sum_k sum nu(u_(1)) b nu(u_(2)) b ... b kappa(u_(k)),
/// computed by the joint recursion with sigma (memoized per word).
/// For a poset, T(Psi(P) . a) = Psi of the Tchebyshev transform of P.
AbPoly tcheb_T(const AbPoly& u);

/// Same operator evaluated straight from the coproduct definition; kept as
/// an independent route and cross-checked against the recursion in tests.
AbPoly tcheb_T_def(const AbPoly& u);

/// sigma(u) = sum kappa(u_(1)) b T(u_(2)); recursive and definitional routes.
AbPoly sigma(const AbPoly& u);
AbPoly sigma_def(const AbPoly& u);

/// pi(u) = 2b T(u) + 2(a-b) sigma(u).
AbPoly pi(const AbPoly& u);

/// T and pi on inputs v.a for a cd-polynomial v, computed natively inside
/// the cd-subalgebra via the joint cd-recursion:
///   T(1 . a) = c, pi(1 . a) = 2d,
///   T(c u . a) = c T(u . a) + pi(u . a), ...
CdPoly tcheb_T_cd(const CdPoly& v);
CdPoly pi_cd(const CdPoly& v);

/// Tchebyshev transform of the second kind, U(u) = H*(T(u . a)).
AbPoly tcheb_U(const AbPoly& u);

/// U through its nu-product expression; must agree with tcheb_U.
AbPoly tcheb_U_def(const AbPoly& u);

/// Linear functional on Z<a,b>, multiplicative with respect to the mixing
/// product M (Cartesian product of posets) for the built-in instances.
class Character {
 public:
  Character(std::string name, std::function<Int(const Word&)> on_word)
      : name_(std::move(name)), on_word_(std::move(on_word)) {}

  const std::string& name() const { return name_; }
  Int operator()(const Word& w) const { return on_word_(w); }
  Int operator()(const AbPoly& u) const {
    Int total = 0;
    for (const auto& [w, c] : u.terms()) total = checked_add(total, checked_mul(c, on_word_(w)));
    return total;
  }

 private:
  std::string name_;
  std::function<Int(const Word&)> on_word_;
};

/// G(Psi(P)) = 1 for every P; realized as the map A.
Character char_const_one();

/// G(Psi(P)) = |P|; realized as the map C.
Character char_cardinality();

/// G(Psi(P)) = sum_x (-1)^rank(x) mu(0, x). Word-level closed form
///   Z(w) = A(w) + eval(w, 0, 1) + sum_i eval(w_<i, 0, 1) A(w_>i),
/// validated against the poset-side Moebius sum before use elsewhere.
Character char_zaslavsky();

/// G(Psi(P)) = sum_x (1-r)^rank(x) mu(0, x); r = 2 recovers char_zaslavsky.
Character char_r_signed(Int r);

/// Chain map of the first kind:
///   g(u) = sum_k sum kappa(u_(1)) b ghat(u_(2)) b ... b ghat(u_(k)),
/// with ghat(u) = G(u) (a-b)^deg(u).
AbPoly chain_map_first(const Character& g, const AbPoly& u);

/// Chain map of the second kind: ghat factors throughout.
AbPoly chain_map_second(const Character& g, const AbPoly& u);

/// eta(u) = Z(u) (a-b)^deg(u) degree-wise with Z the Zaslavsky character;
/// agrees with nu on cd-polynomials.
AbPoly eta(const AbPoly& u);

/// Coefficients of x^0, x^1, ... of the classical polynomials recovered by
/// substituting c -> x, d -> (x^2 - 1)/2 into to_cd(T(c^{n-1} . a)) and
/// (1/2) to_cd(U(c^{n-1})). The substitution runs over exact rationals and
/// the results are verified integral.
struct TchebPolynomials {
  std::vector<Int> first_kind;   // T_n
  std::vector<Int> second_kind;  // U_{n-1}
};
TchebPolynomials tcheb_polynomial_check(int n);

}  // namespace tcheb
