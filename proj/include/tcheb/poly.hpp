#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tcheb/checked_int.hpp"
#include "tcheb/errors.hpp"

namespace tcheb {

/// Monomials of the free algebra are plain strings over a two-letter
/// alphabet; the empty string is the unit 1.
using Word = std::string;

struct AbAlphabet {
  static constexpr char lo = 'a';
  static constexpr char hi = 'b';
  static constexpr int letter_degree(char) { return 1; }
};

/// deg(c) = 1, deg(d) = 2.
struct CdAlphabet {
  static constexpr char lo = 'c';
  static constexpr char hi = 'd';
  static constexpr int letter_degree(char ch) { return ch == 'd' ? 2 : 1; }
};

template <class Alphabet>
int word_degree(const Word& w) {
  int d = 0;
  for (char ch : w) d += Alphabet::letter_degree(ch);
  return d;
}

template <class Alphabet>
bool valid_word(const Word& w) {
  for (char ch : w)
    if (ch != Alphabet::lo && ch != Alphabet::hi) return false;
  return true;
}

/// Canonical monomial order: by degree, then lexicographic (lo < hi).
template <class Alphabet>
struct GradedLexLess {
  bool operator()(const Word& x, const Word& y) const {
    int dx = word_degree<Alphabet>(x), dy = word_degree<Alphabet>(y);
    if (dx != dy) return dx < dy;
    return x < y;
  }
};

/// Sparse integer linear combination of words. No zero coefficients are
/// stored; terms iterate in graded-lex order.
template <class Alphabet>
class Poly {
 public:
  using TermMap = std::map<Word, Int, GradedLexLess<Alphabet>>;

  Poly() = default;

  static Poly unit() { return word(Word{}); }

  static Poly word(Word w, Int coeff = 1) {
    Poly p;
    p.add_term(std::move(w), coeff);
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Int coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
  }

  void add_term(Word w, Int c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(w), c);
    if (!inserted) {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Maximal degree among terms; -1 for the zero polynomial.
  int degree() const {
    return terms_.empty() ? -1 : word_degree<Alphabet>(terms_.rbegin()->first);
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = word_degree<Alphabet>(terms_.begin()->first);
    return d == degree();
  }

  Poly homogeneous_component(int d) const {
    Poly p;
    for (const auto& [w, c] : terms_)
      if (word_degree<Alphabet>(w) == d) p.terms_.emplace(w, c);
    return p;
  }

  std::vector<int> degrees() const {
    std::vector<int> ds;
    for (const auto& [w, c] : terms_) {
      int d = word_degree<Alphabet>(w);
      if (ds.empty() || ds.back() != d) ds.push_back(d);
    }
    return ds;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, checked_neg(c));
    return *this;
  }

  Poly& operator*=(Int k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c = checked_mul(c, k);
    return *this;
  }

  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(Poly x, Int k) { return x *= k; }
  friend Poly operator*(Int k, Poly x) { return x *= k; }
  friend Poly operator-(Poly x) { return x *= -1; }

  /// Concatenation product, extended bilinearly.
  friend Poly operator*(const Poly& x, const Poly& y) {
    Poly r;
    for (const auto& [wx, cx] : x.terms_)
      for (const auto& [wy, cy] : y.terms_) r.add_term(wx + wy, checked_mul(cx, cy));
    return r;
  }

  friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }
  friend bool operator!=(const Poly& x, const Poly& y) { return !(x == y); }

 private:
  TermMap terms_;
};

using AbPoly = Poly<AbAlphabet>;
using CdPoly = Poly<CdAlphabet>;

/// Text syntax shared by ab- and cd-polynomials: terms `k*word` joined by
/// `+`/`-`, where `1` denotes the empty word, e.g. `2*d + 1*cc`.
/// print/parse round-trip bit-exactly.
std::string to_string(const AbPoly& p);
std::string to_string(const CdPoly& p);
AbPoly parse_ab_poly(const std::string& text);
CdPoly parse_cd_poly(const std::string& text);

}  // namespace tcheb
