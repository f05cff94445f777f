#include "tcheb/ab_ops.hpp"

#include <algorithm>
#include <string>

namespace tcheb {
namespace {

template <class Alphabet>
Poly<Alphabet> star_impl(const Poly<Alphabet>& u) {
  Poly<Alphabet> r;
  for (const auto& [w, c] : u.terms()) {
    Word rev(w.rbegin(), w.rend());
    r.add_term(std::move(rev), c);
  }
  return r;
}

}  // namespace

AbPoly star(const AbPoly& u) { return star_impl(u); }
CdPoly star(const CdPoly& v) { return star_impl(v); }

Tensor2 coproduct(const AbPoly& u) {
  Tensor2 t;
  for (const auto& [w, c] : u.terms())
    for (std::size_t i = 0; i < w.size(); ++i)
      t.add_term(w.substr(0, i), w.substr(i + 1), c);
  return t;
}

TensorK coproduct_k(const AbPoly& u, int k) {
  if (k < 1) throw BadParameter("coproduct_k requires k >= 1");
  TensorK t(k);
  for (const auto& [w, c] : u.terms()) {
    int n = static_cast<int>(w.size());
    // choose k-1 deleted positions 0 <= i_1 < ... < i_{k-1} < n
    std::vector<int> del(k - 1);
    for (int j = 0; j < k - 1; ++j) del[j] = j;
    if (k - 1 > n) continue;
    while (true) {
      std::vector<Word> factors;
      factors.reserve(k);
      int prev = -1;
      for (int j = 0; j < k - 1; ++j) {
        factors.push_back(w.substr(prev + 1, del[j] - prev - 1));
        prev = del[j];
      }
      factors.push_back(w.substr(prev + 1));
      t.add_term(std::move(factors), c);
      // next combination
      int j = k - 2;
      while (j >= 0 && del[j] == n - (k - 1 - j)) --j;
      if (j < 0) break;
      ++del[j];
      for (int l = j + 1; l < k - 1; ++l) del[l] = del[l - 1] + 1;
    }
  }
  return t;
}

Int eval(const AbPoly& u, Int a_val, Int b_val) {
  Int total = 0;
  for (const auto& [w, c] : u.terms()) {
    Int term = c;
    for (char ch : w) term = checked_mul(term, ch == 'a' ? a_val : b_val);
    total = checked_add(total, term);
  }
  return total;
}

Int map_A(const Word& w) {
  return w.find('b') == Word::npos ? 1 : 0;
}

Int map_A(const AbPoly& u) {
  Int total = 0;
  for (const auto& [w, c] : u.terms())
    if (map_A(w)) total = checked_add(total, c);
  return total;
}

Int map_C(const Word& w) {
  // C(1) = 2, C(a.u) = A(u) + C(u), C(b.u) = A(u)
  Int c = 2;
  for (std::size_t i = w.size(); i-- > 0;) {
    Int a_tail = map_A(w.substr(i + 1));
    c = w[i] == 'a' ? checked_add(a_tail, c) : a_tail;
  }
  return c;
}

Int map_C(const AbPoly& u) {
  Int total = 0;
  for (const auto& [w, c] : u.terms()) total = checked_add(total, checked_mul(c, map_C(w)));
  return total;
}

AbPoly e_power(int n) {
  AbPoly p = AbPoly::unit();
  AbPoly e = AbPoly::word("a") - AbPoly::word("b");
  for (int i = 0; i < n; ++i) p = p * e;
  return p;
}

namespace {

AbPoly hat_map(const AbPoly& u, Int (*functional)(const Word&)) {
  AbPoly r;
  for (const auto& [w, c] : u.terms()) {
    Int scalar = checked_mul(c, functional(w));
    if (scalar == 0) continue;
    AbPoly e = e_power(static_cast<int>(w.size()));
    r += e * scalar;
  }
  return r;
}

}  // namespace

AbPoly kappa(const AbPoly& u) { return hat_map(u, &map_A); }
AbPoly nu(const AbPoly& u) { return hat_map(u, &map_C); }

AbPoly map_H(const AbPoly& u) {
  AbPoly r;
  for (const auto& [w, c] : u.terms())
    if (!w.empty()) r.add_term(w.substr(1), c);
  return r;
}

AbPoly map_H_star(const AbPoly& u) {
  AbPoly r;
  for (const auto& [w, c] : u.terms())
    if (!w.empty()) r.add_term(w.substr(0, w.size() - 1), c);
  return r;
}

CdPoly map_H(const CdPoly& v) {
  CdPoly r;
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;
    if (w.front() == 'c')
      r.add_term(w.substr(1), checked_mul(2, c));
    else
      r.add_term('c' + w.substr(1), c);
  }
  return r;
}

CdPoly map_H_star(const CdPoly& v) {
  CdPoly r;
  for (const auto& [w, c] : v.terms()) {
    if (w.empty()) continue;
    Word head = w.substr(0, w.size() - 1);
    if (w.back() == 'c')
      r.add_term(std::move(head), checked_mul(2, c));
    else
      r.add_term(head + 'c', c);
  }
  return r;
}

CdPoly omega(const AbPoly& u) {
  CdPoly r;
  for (const auto& [w, c] : u.terms()) {
    Word image;
    Int coeff = c;
    for (std::size_t i = 0; i < w.size();) {
      if (i + 1 < w.size() && w[i] == 'a' && w[i + 1] == 'b') {
        image += 'd';
        coeff = checked_mul(coeff, 2);
        i += 2;
      } else {
        image += 'c';
        ++i;
      }
    }
    r.add_term(std::move(image), coeff);
  }
  return r;
}

AbPoly cd_to_ab(const CdPoly& v) {
  AbPoly c_poly = AbPoly::word("a") + AbPoly::word("b");
  AbPoly d_poly = AbPoly::word("ab") + AbPoly::word("ba");
  AbPoly r;
  for (const auto& [w, coeff] : v.terms()) {
    AbPoly term = AbPoly::unit();
    for (char ch : w) term = term * (ch == 'c' ? c_poly : d_poly);
    r += term * coeff;
  }
  return r;
}

namespace {

// The graded-lex least ab-word of the expansion of a cd-word takes a from
// each c and ab from each d; this map is invertible by a left-to-right scan.
bool parse_min_image(const Word& w, Word* cd_word) {
  cd_word->clear();
  for (std::size_t i = 0; i < w.size();) {
    if (w[i] == 'b') return false;
    if (i + 1 < w.size() && w[i + 1] == 'b') {
      *cd_word += 'd';
      i += 2;
    } else {
      *cd_word += 'c';
      ++i;
    }
  }
  return true;
}

}  // namespace

CdPoly to_cd(const AbPoly& u) {
  CdPoly result;
  AbPoly rem = u;
  while (!rem.is_zero()) {
    const auto& [w, c] = *rem.terms().begin();
    Word cd_word;
    if (!parse_min_image(w, &cd_word))
      throw NotCdExpressible("no cd-expression: leftover word " + (w.empty() ? std::string("1") : w));
    result.add_term(cd_word, c);
    rem -= cd_to_ab(CdPoly::word(cd_word)) * c;
  }
  return result;
}

bool is_c2d(const CdPoly& v) {
  for (const auto& [w, c] : v.terms()) {
    int k = static_cast<int>(std::count(w.begin(), w.end(), 'd'));
    Int pow2 = checked_pow(2, k);
    if (c % pow2 != 0) return false;
  }
  return true;
}

}  // namespace tcheb
