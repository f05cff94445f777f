#include "tcheb/poly.hpp"

#include <cctype>
#include <sstream>

namespace tcheb {
namespace {

template <class Alphabet>
std::string print_poly(const Poly<Alphabet>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Int abs = c < 0 ? checked_neg(c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << abs << '*' << (w.empty() ? "1" : w);
  }
  return out.str();
}

// poly := ['-'] term (('+'|'-') term)* ; term := [int '*'] word ; word := "1" | letters
template <class Alphabet>
Poly<Alphabet> parse_poly(const std::string& text) {
  Poly<Alphabet> result;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw ParseError("empty polynomial");
  bool any = false;
  Int sign = 1;
  if (text[i] == '-') {
    sign = -1;
    ++i;
  } else if (text[i] == '+') {
    ++i;
  }
  while (true) {
    skip_ws();
    if (i == text.size()) throw ParseError("expected term in polynomial");
    Int coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      Int value = 0;
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = checked_add(checked_mul(value, 10), text[i] - '0');
        ++i;
      }
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        coeff = value;
        saw_coeff = true;
        ++i;
        skip_ws();
      } else if (value == 1 || value == 0) {
        // bare integer term: the empty word (only 0 and 1 arise in our syntax)
        result.add_term(Word{}, checked_mul(sign, value));
        goto term_done;
      } else {
        throw ParseError("integer term other than 0/1 at position " + std::to_string(start));
      }
    }
    {
      std::size_t start = i;
      while (i < text.size() && (text[i] == Alphabet::lo || text[i] == Alphabet::hi)) ++i;
      Word w = text.substr(start, i - start);
      if (w.empty()) {
        if (i < text.size() && text[i] == '1') {
          ++i;
          w.clear();
        } else {
          throw ParseError("expected word at position " + std::to_string(start));
        }
      }
      (void)saw_coeff;
      result.add_term(std::move(w), checked_mul(sign, coeff));
    }
  term_done:
    skip_ws();
    if (i == text.size()) break;
    if (text[i] == '+') {
      sign = 1;
    } else if (text[i] == '-') {
      sign = -1;
    } else {
      throw ParseError("unexpected character '" + std::string(1, text[i]) + "' in polynomial");
    }
    ++i;
    any = true;
  }
  (void)any;
  return result;
}

}  // namespace

std::string to_string(const AbPoly& p) { return print_poly(p); }
std::string to_string(const CdPoly& p) { return print_poly(p); }
AbPoly parse_ab_poly(const std::string& text) { return parse_poly<AbAlphabet>(text); }
CdPoly parse_cd_poly(const std::string& text) { return parse_poly<CdAlphabet>(text); }

}  // namespace tcheb
