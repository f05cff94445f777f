#include "tcheb/qsym.hpp"

#include <cctype>
#include <sstream>

namespace tcheb {

void tensor_add(QSymTensor& t, const QSymElem& l, const QSymElem& r, Int scale) {
  for (const auto& [a, ca] : l.terms())
    for (const auto& [b, cb] : r.terms()) {
      auto key = std::make_pair(a, b);
      Int c = checked_mul(scale, checked_mul(ca, cb));
      auto [it, inserted] = t.emplace(key, c);
      if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) t.erase(it);
      }
    }
}

void tensor_add(BQSymTensor& t, const BQSymElem& l, const QSymElem& r, Int scale) {
  for (const auto& [k, ck] : l.terms())
    for (const auto& [b, cb] : r.terms()) {
      auto key = std::make_pair(k, b);
      Int c = checked_mul(scale, checked_mul(ck, cb));
      auto [it, inserted] = t.emplace(key, c);
      if (!inserted) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) t.erase(it);
      }
    }
}

namespace {

void quasi_shuffle(const Composition& a, std::size_t i, const Composition& b, std::size_t j,
                   Composition& acc, QSymElem& out, Int coeff) {
  if (i == a.size() && j == b.size()) {
    out.add_term(acc, coeff);
    return;
  }
  if (i < a.size()) {
    acc.push_back(a[i]);
    quasi_shuffle(a, i + 1, b, j, acc, out, coeff);
    acc.pop_back();
  }
  if (j < b.size()) {
    acc.push_back(b[j]);
    quasi_shuffle(a, i, b, j + 1, acc, out, coeff);
    acc.pop_back();
  }
  if (i < a.size() && j < b.size()) {
    acc.push_back(a[i] + b[j]);
    quasi_shuffle(a, i + 1, b, j + 1, acc, out, coeff);
    acc.pop_back();
  }
}

}  // namespace

QSymElem qsym_product(const QSymElem& f, const QSymElem& g) {
  QSymElem out;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      Composition acc;
      quasi_shuffle(a, 0, b, 0, acc, out, checked_mul(ca, cb));
    }
  return out;
}

QSymTensor qsym_coproduct(const QSymElem& f) {
  QSymTensor t;
  for (const auto& [a, c] : f.terms())
    for (std::size_t i = 0; i <= a.size(); ++i) {
      Composition left(a.begin(), a.begin() + i), right(a.begin() + i, a.end());
      tensor_add(t, QSymElem::basis(std::move(left)), QSymElem::basis(std::move(right)), c);
    }
  return t;
}

BQSymElem bqsym_product(const BQSymElem& f, const BQSymElem& g) {
  BQSymElem out;
  for (const auto& [kf, cf] : f.terms())
    for (const auto& [kg, cg] : g.terms()) {
      QSymElem shuffled;
      Composition acc;
      quasi_shuffle(kf.second, 0, kg.second, 0, acc, shuffled, checked_mul(cf, cg));
      for (const auto& [a, c] : shuffled.terms()) out.add_term(kf.first + kg.first, a, c);
    }
  return out;
}

BQSymTensor bqsym_coproduct(const BQSymElem& f) {
  BQSymTensor t;
  for (const auto& [k, c] : f.terms()) {
    const auto& [p, a] = k;
    for (std::size_t i = 0; i <= a.size(); ++i) {
      Composition left(a.begin(), a.begin() + i), right(a.begin() + i, a.end());
      tensor_add(t, BQSymElem::basis(p, std::move(left)), QSymElem::basis(std::move(right)), c);
    }
  }
  return t;
}

namespace {

// Runs of the letters-e word between b's, as a composition (run + 1 each).
Composition runs_to_composition(const std::vector<int>& runs) {
  Composition a;
  a.reserve(runs.size());
  for (int r : runs) a.push_back(r + 1);
  return a;
}

// Expands each a into (a-b) + b: iterate subsets of a-positions chosen as b.
template <class Fn>
void for_each_eb_word(const Word& w, Fn&& fn) {
  std::vector<int> a_pos;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == 'a') a_pos.push_back(static_cast<int>(i));
  int m = static_cast<int>(a_pos.size());
  if (m > 25) throw BadParameter("gamma: word degree too large");
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    // b-positions: original b's plus chosen a-positions
    std::vector<bool> is_b(w.size(), false);
    for (std::size_t i = 0; i < w.size(); ++i) is_b[i] = w[i] == 'b';
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) is_b[a_pos[j]] = true;
    std::vector<int> runs;
    int run = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (is_b[i]) {
        runs.push_back(run);
        run = 0;
      } else {
        ++run;
      }
    }
    runs.push_back(run);
    fn(runs);
  }
}

}  // namespace

QSymElem gamma(const AbPoly& u) {
  QSymElem out;
  for (const auto& [w, c] : u.terms())
    for_each_eb_word(w, [&](const std::vector<int>& runs) {
      out.add_term(runs_to_composition(runs), c);
    });
  return out;
}

AbPoly gamma_inv(const QSymElem& f) {
  AbPoly out;
  AbPoly b = AbPoly::word("b");
  for (const auto& [a, c] : f.terms()) {
    if (a.empty())
      throw NonPositiveDegree("gamma_inv is undefined on the unit of QSym");
    AbPoly term = e_power(a[0] - 1);
    for (std::size_t i = 1; i < a.size(); ++i) term = term * b * e_power(a[i] - 1);
    out += term * c;
  }
  return out;
}

BQSymElem gamma_B(const AbPoly& u) {
  BQSymElem out;
  for (const auto& [w, c] : u.terms())
    for_each_eb_word(w, [&](const std::vector<int>& runs) {
      int p = runs.front();
      Composition a;
      a.reserve(runs.size() - 1);
      for (std::size_t i = 1; i < runs.size(); ++i) a.push_back(runs[i] + 1);
      out.add_term(p, std::move(a), c);
    });
  return out;
}

AbPoly gamma_B_inv(const BQSymElem& f) {
  AbPoly out;
  AbPoly b = AbPoly::word("b");
  for (const auto& [k, c] : f.terms()) {
    const auto& [p, a] = k;
    AbPoly term = e_power(p);
    for (int part : a) term = term * b * e_power(part - 1);
    out += term * c;
  }
  return out;
}

QSymElem F(const Poset& p) {
  if (p.height() == 0) return QSymElem::unit();
  return gamma(ab_index(p));
}

BQSymElem F_B(const Poset& p) { return gamma_B(ab_index(p)); }

BQSymElem F_B_interval_form(const Poset& p) {
  if (p.height() < 1) throw RankZeroInput("F_B requires rank >= 1");
  BQSymElem out;
  for (int x = 0; x < p.size(); ++x) {
    if (x == p.bottom()) continue;
    const QSymElem upper = F(interval(p, x, p.top()));
    for (const auto& [a, c] : upper.terms()) out.add_term(p.rank(x) - 1, a, c);
  }
  return out;
}

AbPoly mix_M(const AbPoly& u, const AbPoly& v) {
  return gamma_inv(qsym_product(gamma(u), gamma(v)));
}

AbPoly mix_N(const AbPoly& u, const AbPoly& v) {
  return gamma_B_inv(bqsym_product(gamma_B(u), gamma_B(v)));
}

AbPoly mix_N_star(const AbPoly& u, const AbPoly& v) {
  return star(mix_N(star(u), star(v)));
}

namespace {

// split off the coefficient of the empty composition
std::pair<Int, QSymElem> split_unit(const QSymElem& f) {
  Int c = f.coeff({});
  QSymElem rest = f;
  rest.add_term({}, checked_neg(c));
  return {c, rest};
}

}  // namespace

QSymElem U_qsym(const QSymElem& f) {
  auto [c, rest] = split_unit(f);
  QSymElem out = QSymElem::basis({}, c);
  if (!rest.is_zero()) out += gamma(tcheb_U(gamma_inv(rest)));
  return out;
}

QSymElem gtilde_qsym(const Character& g, const QSymElem& f) {
  auto [c, rest] = split_unit(f);
  QSymElem out = QSymElem::basis({}, c);
  if (!rest.is_zero()) out += gamma(chain_map_second(g, gamma_inv(rest)));
  return out;
}

BQSymElem g_bqsym(const Character& g, const BQSymElem& f) {
  return gamma_B(chain_map_first(g, gamma_B_inv(f)));
}

namespace {

void print_composition(std::ostringstream& out, const Composition& a) {
  out << "M[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out << ',';
    out << a[i];
  }
  out << ']';
}

}  // namespace

std::string to_string(const QSymElem& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : f.terms()) {
    Int abs = c < 0 ? checked_neg(c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << abs << '*';
    if (a.empty())
      out << '1';
    else
      print_composition(out, a);
  }
  return out.str();
}

std::string to_string(const BQSymElem& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    const auto& [p, a] = k;
    Int abs = c < 0 ? checked_neg(c) : c;
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    out << abs << '*';
    if (p == 0 && a.empty()) {
      out << '1';
      continue;
    }
    if (p > 0) {
      out << "s^" << p;
      if (!a.empty()) out << '*';
    }
    if (!a.empty()) print_composition(out, a);
  }
  return out.str();
}

namespace {

class QParser {
 public:
  explicit QParser(const std::string& text) : text_(text) {}

  // term := [int '*'] factor ; factor := '1' | s-part ['*' M-part] | M-part
  template <class AddTerm>
  void parse(AddTerm&& add) {
    skip_ws();
    if (eof()) throw ParseError("empty expression");
    Int sign = 1;
    if (peek() == '-') {
      sign = -1;
      next();
    } else if (peek() == '+') {
      next();
    }
    while (true) {
      skip_ws();
      Int coeff = 1;
      if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
        Int value = read_int();
        skip_ws();
        if (!eof() && peek() == '*') {
          next();
          skip_ws();
          coeff = value;
        } else {
          if (value != 1 && value != 0) throw ParseError("bare integer must be 0 or 1");
          add(checked_mul(sign, value), 0, Composition{});
          goto term_done;
        }
      }
      {
        int p = 0;
        Composition a;
        bool any = false;
        if (!eof() && peek() == '1') {
          next();
          any = true;
        } else {
          if (!eof() && peek() == 's') {
            next();
            expect('^');
            p = static_cast<int>(read_int());
            any = true;
            skip_ws();
            if (!eof() && peek() == '*') {
              next();
              skip_ws();
            }
          }
          if (!eof() && peek() == 'M') {
            next();
            expect('[');
            skip_ws();
            if (peek() != ']') {
              while (true) {
                a.push_back(static_cast<int>(read_int()));
                if (a.back() < 1) throw ParseError("composition parts must be positive");
                skip_ws();
                if (peek() == ',') {
                  next();
                  skip_ws();
                  continue;
                }
                break;
              }
            }
            expect(']');
            any = true;
          }
        }
        if (!any) throw ParseError("expected term");
        add(checked_mul(sign, coeff), p, std::move(a));
      }
    term_done:
      skip_ws();
      if (eof()) break;
      if (peek() == '+')
        sign = 1;
      else if (peek() == '-')
        sign = -1;
      else
        throw ParseError(std::string("unexpected character '") + peek() + "'");
      next();
    }
  }

 private:
  bool eof() const { return i_ >= text_.size(); }
  char peek() const {
    if (eof()) throw ParseError("unexpected end of input");
    return text_[i_];
  }
  void next() { ++i_; }
  void expect(char c) {
    if (eof() || text_[i_] != c) throw ParseError(std::string("expected '") + c + "'");
    ++i_;
  }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }
  Int read_int() {
    if (eof() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
      throw ParseError("expected integer");
    Int value = 0;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      value = checked_add(checked_mul(value, 10), text_[i_] - '0');
      ++i_;
    }
    return value;
  }

  const std::string& text_;
  std::size_t i_ = 0;
};

}  // namespace

QSymElem parse_qsym(const std::string& text) {
  QSymElem f;
  QParser(text).parse([&](Int c, int p, Composition a) {
    if (p != 0) throw ParseError("s-powers are not valid in QSym");
    f.add_term(std::move(a), c);
  });
  return f;
}

BQSymElem parse_bqsym(const std::string& text) {
  BQSymElem f;
  QParser(text).parse([&](Int c, int p, Composition a) { f.add_term(p, std::move(a), c); });
  return f;
}

}  // namespace tcheb
