#include "tcheb/transforms.hpp"

#include <gmpxx.h>

#include <map>
#include <utility>

namespace tcheb {
namespace {

// Joint recursion for T and sigma, memoized on suffix words:
//   T(1) = 1,            sigma(1) = 0,
//   T(a.u) = (a+b) T(u) + (a-b) sigma(u),  sigma(a.u) = b T(u) + (a-b) sigma(u),
//   T(b.u) = 2b T(u) + (a-b) sigma(u),     sigma(b.u) = b T(u).
class TSigmaTable {
 public:
  const std::pair<AbPoly, AbPoly>& get(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    std::pair<AbPoly, AbPoly> value;
    if (w.empty()) {
      value.first = AbPoly::unit();
    } else {
      const auto& [t, s] = get(w.substr(1));
      AbPoly e = e_poly();
      if (w.front() == 'a') {
        value.first = c_poly() * t + e * s;
        value.second = AbPoly::word("b") * t + e * s;
      } else {
        value.first = AbPoly::word("b", 2) * t + e * s;
        value.second = AbPoly::word("b") * t;
      }
    }
    return memo_.emplace(w, std::move(value)).first->second;
  }

 private:
  static AbPoly e_poly() { return AbPoly::word("a") - AbPoly::word("b"); }
  static AbPoly c_poly() { return AbPoly::word("a") + AbPoly::word("b"); }
  std::map<Word, std::pair<AbPoly, AbPoly>> memo_;
};

AbPoly apply_t_sigma(const AbPoly& u, bool want_sigma) {
  TSigmaTable table;
  AbPoly r;
  for (const auto& [w, c] : u.terms()) {
    const auto& ts = table.get(w);
    r += (want_sigma ? ts.second : ts.first) * c;
  }
  return r;
}

// Expands sum_k sum factor(1, k, u_(1)) b factor(2, k, u_(2)) b ... over the
// coproduct into k parts; the scalar for the j-th part (0-based) of a k-part
// split comes from `factor`. Zero scalars prune the expansion.
AbPoly chain_expansion(const AbPoly& u, const std::function<Int(int, int, const Word&)>& factor) {
  AbPoly result;
  AbPoly b = AbPoly::word("b");
  for (const auto& [w, coeff] : u.terms()) {
    int n = static_cast<int>(w.size());
    if (n > 20) throw BadParameter("chain_expansion: word degree too large");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      // mask marks deleted positions; gaps are the coproduct factors
      int k = __builtin_popcount(mask) + 1;
      Int scalar = coeff;
      int j = 0, start = 0;
      bool dead = false;
      for (int i = 0; i <= n && !dead; ++i) {
        if (i == n || (mask & (1u << i))) {
          scalar = checked_mul(scalar, factor(j, k, w.substr(start, i - start)));
          dead = scalar == 0;
          start = i + 1;
          ++j;
        }
      }
      if (dead) continue;
      AbPoly piece = AbPoly::unit();
      start = 0;
      for (int i = 0; i <= n; ++i) {
        if (i == n || (mask & (1u << i))) {
          piece = piece * e_power(i - start);
          if (i < n) piece = piece * b;
          start = i + 1;
        }
      }
      result += piece * scalar;
    }
  }
  return result;
}

}  // namespace

AbPoly tcheb_T(const AbPoly& u) { return apply_t_sigma(u, false); }

AbPoly tcheb_T_def(const AbPoly& u) {
  return chain_expansion(
      u, [](int j, int k, const Word& w) { return j == k - 1 ? map_A(w) : map_C(w); });
}

AbPoly sigma(const AbPoly& u) { return apply_t_sigma(u, true); }

AbPoly sigma_def(const AbPoly& u) {
  AbPoly r;
  AbPoly b = AbPoly::word("b");
  for (const auto& [w, c] : u.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      Word prefix = w.substr(0, i);
      if (map_A(prefix) == 0) continue;
      r += e_power(static_cast<int>(prefix.size())) * b * tcheb_T(AbPoly::word(w.substr(i + 1))) * c;
    }
  }
  return r;
}

AbPoly pi(const AbPoly& u) {
  AbPoly b2 = AbPoly::word("b", 2);
  return b2 * tcheb_T(u) + e_power(1) * 2 * sigma(u);
}

namespace {

// cd-level joint recursion on T(v.a), pi(v.a); memoized per cd-word.
class CdTable {
 public:
  const std::pair<CdPoly, CdPoly>& get(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    std::pair<CdPoly, CdPoly> value;
    if (w.empty()) {
      value.first = CdPoly::word("c");
      value.second = CdPoly::word("d", 2);
    } else {
      const auto& [t, p] = get(w.substr(1));
      if (w.front() == 'c') {
        value.first = CdPoly::word("c") * t + p;
        value.second = CdPoly::word("d", 2) * t + CdPoly::word("c") * p;
      } else {
        value.first = CdPoly::word("d", 2) * t + CdPoly::word("c") * p;
        value.second = CdPoly::word("cd", 2) * t + CdPoly::word("d", 2) * p;
      }
    }
    return memo_.emplace(w, std::move(value)).first->second;
  }

 private:
  std::map<Word, std::pair<CdPoly, CdPoly>> memo_;
};

CdPoly apply_cd(const CdPoly& v, bool want_pi) {
  CdTable table;
  CdPoly r;
  for (const auto& [w, c] : v.terms()) {
    const auto& tp = table.get(w);
    r += (want_pi ? tp.second : tp.first) * c;
  }
  return r;
}

}  // namespace

CdPoly tcheb_T_cd(const CdPoly& v) { return apply_cd(v, false); }
CdPoly pi_cd(const CdPoly& v) { return apply_cd(v, true); }

AbPoly tcheb_U(const AbPoly& u) { return map_H_star(tcheb_T(u * AbPoly::word("a"))); }

AbPoly tcheb_U_def(const AbPoly& u) {
  return chain_expansion(u, [](int, int, const Word& w) { return map_C(w); });
}

Character char_const_one() {
  return Character("const-one", [](const Word& w) { return map_A(w); });
}

Character char_cardinality() {
  return Character("cardinality", [](const Word& w) { return map_C(w); });
}

namespace {

Int all_b(const Word& w) { return w.find('a') == Word::npos ? 1 : 0; }

Int zaslavsky_word(const Word& w) {
  int n = static_cast<int>(w.size());
  Int total = checked_add(map_A(w), all_b(w));
  for (int i = 1; i <= n; ++i) {
    Int left = all_b(w.substr(0, i - 1));
    Int right = map_A(w.substr(i));
    total = checked_add(total, checked_mul(left, right));
  }
  return total;
}

Int r_signed_word(const Word& w, Int r) {
  int n = static_cast<int>(w.size());
  Int q = checked_sub(r, 1);
  Int total = checked_add(map_A(w), checked_mul(checked_pow(q, n + 1), all_b(w)));
  for (int i = 1; i <= n; ++i) {
    Int left = all_b(w.substr(0, i - 1));
    Int right = map_A(w.substr(i));
    total = checked_add(total, checked_mul(checked_pow(q, i), checked_mul(left, right)));
  }
  return total;
}

}  // namespace

Character char_zaslavsky() { return Character("zaslavsky", &zaslavsky_word); }

Character char_r_signed(Int r) {
  return Character("r-signed(" + std::to_string(r) + ")",
                   [r](const Word& w) { return r_signed_word(w, r); });
}

AbPoly chain_map_first(const Character& g, const AbPoly& u) {
  return chain_expansion(u, [&g](int j, int, const Word& w) { return j == 0 ? map_A(w) : g(w); });
}

AbPoly chain_map_second(const Character& g, const AbPoly& u) {
  return chain_expansion(u, [&g](int, int, const Word& w) { return g(w); });
}

AbPoly eta(const AbPoly& u) {
  AbPoly r;
  for (const auto& [w, c] : u.terms()) {
    Int scalar = checked_mul(c, zaslavsky_word(w));
    if (scalar != 0) r += e_power(static_cast<int>(w.size())) * scalar;
  }
  return r;
}

namespace {

// dense univariate polynomial over exact rationals
using QPoly = std::vector<mpq_class>;

QPoly qp_mul(const QPoly& x, const QPoly& y) {
  if (x.empty() || y.empty()) return {};
  QPoly r(x.size() + y.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
  return r;
}

void qp_add(QPoly& x, const QPoly& y, const mpq_class& scale) {
  if (x.size() < y.size()) x.resize(y.size(), mpq_class(0));
  for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i] * scale;
}

// c -> x, d -> (x^2 - 1)/2
QPoly substitute(const CdPoly& v) {
  QPoly x = {mpq_class(0), mpq_class(1)};
  QPoly d = {mpq_class(-1, 2), mpq_class(0), mpq_class(1, 2)};
  QPoly total;
  for (const auto& [w, c] : v.terms()) {
    QPoly term = {mpq_class(1)};
    for (char ch : w) term = qp_mul(term, ch == 'c' ? x : d);
    qp_add(total, term, mpq_class(static_cast<long>(c)));
  }
  while (!total.empty() && total.back() == 0) total.pop_back();
  return total;
}

std::vector<Int> to_int_poly(const QPoly& q, const char* what) {
  std::vector<Int> r;
  r.reserve(q.size());
  for (const auto& coeff : q) {
    if (coeff.get_den() != 1)
      throw NotCdExpressible(std::string(what) + ": non-integral coefficient after substitution");
    if (!coeff.get_num().fits_slong_p()) throw CoefficientOverflow(what);
    r.push_back(coeff.get_num().get_si());
  }
  return r;
}

}  // namespace

TchebPolynomials tcheb_polynomial_check(int n) {
  if (n < 1) throw BadParameter("tcheb_polynomial_check requires n >= 1");
  CdPoly c_pow = CdPoly::word(Word(static_cast<std::size_t>(n - 1), 'c'));
  TchebPolynomials out;
  out.first_kind = to_int_poly(substitute(tcheb_T_cd(c_pow)), "T_n");

  AbPoly u_val = tcheb_U(cd_to_ab(c_pow));
  QPoly second = substitute(to_cd(u_val));
  for (auto& coeff : second) coeff /= 2;
  out.second_kind = to_int_poly(second, "U_{n-1}");
  return out;
}

}  // namespace tcheb
