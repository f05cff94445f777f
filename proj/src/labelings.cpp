#include "tcheb/labelings.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tcheb {

Label zero_label() { return Label{"0", Label::Sign::none}; }

std::string to_string(const Label& l) {
  switch (l.sign) {
    case Label::Sign::small:
      return l.base + "^s";
    case Label::Sign::big:
      return l.base + "^b";
    default:
      return l.base;
  }
}

EdgeLabeling::EdgeLabeling(std::shared_ptr<const Poset> poset,
                           std::map<std::pair<int, int>, Label> labels, std::vector<Label> order)
    : poset_(std::move(poset)), labels_(std::move(labels)), order_(std::move(order)) {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    auto [it, inserted] = order_index_.emplace(order_[i], static_cast<int>(i));
    if (!inserted) throw BadParameter("duplicate label in declared order: " + to_string(order_[i]));
  }
  for (auto [x, y] : poset_->covers()) {
    auto it = labels_.find({x, y});
    if (it == labels_.end())
      throw BadParameter("unlabeled Hasse edge " + poset_->id(x) + " < " + poset_->id(y));
    if (!order_index_.count(it->second))
      throw BadParameter("label " + to_string(it->second) + " missing from declared order");
  }
}

const Label& EdgeLabeling::label(int x, int y) const {
  auto it = labels_.find({x, y});
  if (it == labels_.end())
    throw BadParameter("no Hasse edge " + poset_->id(x) + " < " + poset_->id(y));
  return it->second;
}

int EdgeLabeling::order_index(const Label& l) const {
  auto it = order_index_.find(l);
  if (it == order_index_.end()) throw BadParameter("label not in declared order: " + to_string(l));
  return it->second;
}

namespace {

// label strings of all saturated chains from x to y (covers restrict to
// intervals, so plain cover steps suffice)
void maximal_chain_strings(const EdgeLabeling& l, int x, int y, LabelString& acc,
                           std::vector<LabelString>& out) {
  if (x == y) {
    out.push_back(acc);
    return;
  }
  const Poset& p = l.poset();
  for (int z : p.upper_covers(x)) {
    if (!p.leq(z, y)) continue;
    acc.push_back(l.label(x, z));
    maximal_chain_strings(l, z, y, acc, out);
    acc.pop_back();
  }
}

bool weakly_rising(const EdgeLabeling& l, const LabelString& s) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i)
    if (!l.label_leq(s[i], s[i + 1])) return false;
  return true;
}

// lexicographic comparison in the declared label order
int lex_compare(const EdgeLabeling& l, const LabelString& a, const LabelString& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int ia = l.order_index(a[i]), ib = l.order_index(b[i]);
    if (ia != ib) return ia < ib ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

bool check_labeling(const EdgeLabeling& l, bool el, int rank_cap) {
  const Poset& p = l.poset();
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (!p.less(x, y) || p.rank_between(x, y) > rank_cap) continue;
      std::vector<LabelString> strings;
      LabelString acc;
      maximal_chain_strings(l, x, y, acc, strings);
      const LabelString* rising = nullptr;
      int rising_count = 0;
      for (const auto& s : strings)
        if (weakly_rising(l, s)) {
          ++rising_count;
          rising = &s;
        }
      if (rising_count != 1) return false;
      if (el)
        for (const auto& s : strings)
          if (&s != rising && lex_compare(l, *rising, s) >= 0) return false;
    }
  return true;
}

}  // namespace

bool is_R_labeling(const EdgeLabeling& l, int rank_cap) { return check_labeling(l, false, rank_cap); }
bool is_EL_labeling(const EdgeLabeling& l, int rank_cap) { return check_labeling(l, true, rank_cap); }

std::vector<LabelString> jordan_holder(const EdgeLabeling& l, int x, int y) {
  if (!l.poset().leq(x, y))
    throw NotComparable(l.poset().id(x) + " and " + l.poset().id(y) + " are not comparable");
  std::vector<LabelString> strings;
  LabelString acc;
  maximal_chain_strings(l, x, y, acc, strings);
  std::sort(strings.begin(), strings.end());
  return strings;
}

std::vector<LabelString> jordan_holder(const EdgeLabeling& l) {
  return jordan_holder(l, l.poset().bottom(), l.poset().top());
}

Word descent_word(const EdgeLabeling& l, const LabelString& s) {
  if (s.empty()) throw BadParameter("descent_word requires a non-empty label string");
  Word w;
  w.reserve(s.size() - 1);
  for (std::size_t i = 0; i + 1 < s.size(); ++i) w += l.label_leq(s[i], s[i + 1]) ? 'a' : 'b';
  return w;
}

AbPoly jh_ab_index(const EdgeLabeling& l) {
  AbPoly psi;
  for (const auto& s : jordan_holder(l)) psi.add_term(descent_word(l, s), 1);
  return psi;
}

EdgeLabeling tcheb_labeling(const Poset& p, const EdgeLabeling& l) {
  if (l.poset().size() != p.size()) throw BadParameter("labeling does not match the poset");
  TchebPoset t = tchebyshev_poset_mapped(p);
  auto poset = std::make_shared<const Poset>(std::move(t.poset));
  std::map<std::pair<int, int>, Label> labels;
  for (auto [i, j] : poset->covers()) {
    if (j == t.top_index) {
      labels[{i, j}] = zero_label();
      continue;
    }
    auto [x, y] = t.pairs[i];
    auto [z, w] = t.pairs[j];
    Label base = l.label(y, w);
    base.sign = (z == y) ? Label::Sign::small : Label::Sign::big;
    labels[{i, j}] = base;
  }
  std::vector<Label> order;
  for (const Label& lab : l.order()) order.push_back(Label{lab.base, Label::Sign::small});
  order.push_back(zero_label());
  for (const Label& lab : l.order()) order.push_back(Label{lab.base, Label::Sign::big});
  return EdgeLabeling(std::move(poset), std::move(labels), std::move(order));
}

namespace {

void shuffle_rec(const LabelString& x, std::size_t i, const LabelString& y, std::size_t j,
                 LabelString& acc, std::vector<LabelString>& out) {
  if (i == x.size() && j == y.size()) {
    out.push_back(acc);
    return;
  }
  if (i < x.size()) {
    acc.push_back(x[i]);
    shuffle_rec(x, i + 1, y, j, acc, out);
    acc.pop_back();
  }
  if (j < y.size()) {
    acc.push_back(y[j]);
    shuffle_rec(x, i, y, j + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<LabelString> shuffle(const LabelString& x, const LabelString& y) {
  std::vector<LabelString> out;
  LabelString acc;
  shuffle_rec(x, 0, y, 0, acc, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelString> shuffle_sets(const std::vector<LabelString>& xs,
                                      const std::vector<LabelString>& ys) {
  std::vector<LabelString> out;
  for (const auto& x : xs)
    for (const auto& y : ys) {
      auto part = shuffle(x, y);
      out.insert(out.end(), part.begin(), part.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

Label prefixed(const Label& l, const std::string& prefix) {
  if (l == zero_label()) return l;
  return Label{prefix + l.base, l.sign};
}

LabelString prefixed(const LabelString& s, const std::string& prefix) {
  LabelString out;
  out.reserve(s.size());
  for (const Label& l : s) out.push_back(prefixed(l, prefix));
  return out;
}

std::vector<LabelString> prefixed(const std::vector<LabelString>& set, const std::string& prefix) {
  std::vector<LabelString> out;
  out.reserve(set.size());
  for (const auto& s : set) out.push_back(prefixed(s, prefix));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabelString> signed_expand_append_zero(const std::vector<LabelString>& jh) {
  std::vector<LabelString> out;
  for (const auto& s : jh) {
    std::size_t n = s.size();
    if (n > 25) throw BadParameter("signed_expand: string too long");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      LabelString t;
      t.reserve(n + 1);
      for (std::size_t i = 0; i < n; ++i)
        t.push_back(Label{s[i].base, (mask & (1u << i)) ? Label::Sign::big : Label::Sign::small});
      t.push_back(zero_label());
      out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeLabeling cartesian_labeling(const EdgeLabeling& l1, const EdgeLabeling& l2) {
  const Poset& p = l1.poset();
  const Poset& q = l2.poset();
  auto product = std::make_shared<const Poset>(cartesian_product(p, q));
  // element (x, y) of the product sits at index x * q.size() + y
  auto idx = [&](int x, int y) { return x * q.size() + y; };
  std::map<std::pair<int, int>, Label> labels;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      for (int x2 : p.upper_covers(x))
        labels[{idx(x, y), idx(x2, y)}] = prefixed(l1.label(x, x2), "1.");
      for (int y2 : q.upper_covers(y))
        labels[{idx(x, y), idx(x, y2)}] = prefixed(l2.label(y, y2), "2.");
    }
  std::vector<Label> order;
  for (const Label& l : l1.order()) order.push_back(prefixed(l, "1."));
  for (const Label& l : l2.order()) order.push_back(prefixed(l, "2."));
  return EdgeLabeling(std::move(product), std::move(labels), std::move(order));
}

EdgeLabeling dual_diamond_labeling(const EdgeLabeling& l1, const EdgeLabeling& l2) {
  const Poset& p = l1.poset();
  const Poset& q = l2.poset();
  for (const EdgeLabeling* l : {&l1, &l2}) {
    const Poset& pp = l->poset();
    for (auto [x, y] : pp.covers()) {
      bool is_zero = l->label(x, y) == zero_label();
      if (is_zero != (y == pp.top()))
        throw BadParameter("dual_diamond_labeling requires 0 exactly on coatom-to-top edges");
    }
  }
  auto product = std::make_shared<const Poset>(dual_diamond_product(p, q));
  // mirror the element enumeration of dual_diamond_product: (x, y) pairs in
  // x-major order skipping the operand tops, then the new top last
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < p.size(); ++x) {
    if (x == p.top()) continue;
    for (int y = 0; y < q.size(); ++y) {
      if (y == q.top()) continue;
      int i = static_cast<int>(index.size());
      index[{x, y}] = i;
    }
  }
  int top = static_cast<int>(index.size());
  std::map<std::pair<int, int>, Label> labels;
  for (const auto& [xy, i] : index) {
    auto [x, y] = xy;
    if (p.rank(x) == p.height() - 1 && q.rank(y) == q.height() - 1)
      labels[{i, top}] = zero_label();
    for (int x2 : p.upper_covers(x))
      if (x2 != p.top()) labels[{i, index.at({x2, y})}] = prefixed(l1.label(x, x2), "1.");
    for (int y2 : q.upper_covers(y))
      if (y2 != q.top()) labels[{i, index.at({x, y2})}] = prefixed(l2.label(y, y2), "2.");
  }
  // smalls of P1, smalls of P2, 0, bigs of P1, bigs of P2
  std::vector<Label> order;
  auto push_signed = [&order](const EdgeLabeling& l, Label::Sign sign, const std::string& prefix) {
    for (const Label& lab : l.order())
      if (lab.sign == sign) order.push_back(prefixed(lab, prefix));
  };
  push_signed(l1, Label::Sign::small, "1.");
  push_signed(l2, Label::Sign::small, "2.");
  order.push_back(zero_label());
  push_signed(l1, Label::Sign::big, "1.");
  push_signed(l2, Label::Sign::big, "2.");
  return EdgeLabeling(std::move(product), std::move(labels), std::move(order));
}

EdgeLabeling boolean_labeling(int n) {
  auto poset = std::make_shared<const Poset>(boolean_algebra(n));
  // element index = subset bitmask
  std::map<std::pair<int, int>, Label> labels;
  for (auto [x, y] : poset->covers()) {
    int added = y ^ x;
    int bit = __builtin_ctz(static_cast<unsigned>(added));
    labels[{x, y}] = Label{std::to_string(bit + 1), Label::Sign::none};
  }
  std::vector<Label> order;
  for (int i = 1; i <= n; ++i) order.push_back(Label{std::to_string(i), Label::Sign::none});
  return EdgeLabeling(std::move(poset), std::move(labels), std::move(order));
}

EdgeLabeling chain_labeling(int n) {
  auto poset = std::make_shared<const Poset>(chain(n));
  std::map<std::pair<int, int>, Label> labels;
  for (auto [x, y] : poset->covers()) labels[{x, y}] = Label{std::to_string(y), Label::Sign::none};
  std::vector<Label> order;
  for (int i = 1; i <= n; ++i) order.push_back(Label{std::to_string(i), Label::Sign::none});
  return EdgeLabeling(std::move(poset), std::move(labels), std::move(order));
}

EdgeLabeling ladder_labeling(int n) {
  // Stay-left edges are labeled 2, switches into the right column carry
  // strictly decreasing labels n+2-k, returns to the left column carry 0,
  // and the two top edges are 2 (left) and 1 (right). In every interval the
  // unique rising chain hugs the left column after at most one initial
  // return, which also makes it lexicographically least.
  auto poset = std::make_shared<const Poset>(ladder(n));
  auto level = [](int k, int side) { return 1 + 2 * (k - 1) + side; };
  int top = 2 * n + 1;
  std::map<std::pair<int, int>, Label> labels;
  auto tok = [](Int v) { return Label{std::to_string(v), Label::Sign::none}; };
  std::set<Int> used;
  auto put = [&](int x, int y, Int v) {
    labels[{x, y}] = tok(v);
    used.insert(v);
  };
  if (n == 0) {
    put(0, 1, 1);
  } else {
    put(0, level(1, 0), 1);
    put(0, level(1, 1), n + 2);
    for (int k = 1; k < n; ++k) {
      put(level(k, 0), level(k + 1, 0), 2);
      put(level(k, 1), level(k + 1, 0), 0);
      put(level(k, 0), level(k + 1, 1), n + 2 - k);
      put(level(k, 1), level(k + 1, 1), n + 2 - k);
    }
    put(level(n, 0), top, 2);
    put(level(n, 1), top, 1);
  }
  std::vector<Label> order;
  for (Int v : used) order.push_back(tok(v));
  return EdgeLabeling(std::move(poset), std::move(labels), std::move(order));
}

EdgeLabeling parse_labeling(std::shared_ptr<const Poset> poset, const std::string& text) {
  std::map<std::pair<int, int>, Label> labels;
  std::vector<Label> order;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword[0] == '#') continue;
    if (keyword == "label") {
      std::string a, b, token;
      if (!(ls >> a >> b >> token))
        throw MalformedLine("line " + std::to_string(lineno) + ": label needs two ids and a token");
      labels[{poset->index_of(a), poset->index_of(b)}] = Label{token, Label::Sign::none};
    } else if (keyword == "order") {
      std::string token;
      while (ls >> token) order.push_back(Label{token, Label::Sign::none});
    } else {
      throw MalformedLine("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
    }
  }
  return EdgeLabeling(std::move(poset), std::move(labels), std::move(order));
}

std::string emit_labeling(const EdgeLabeling& l) {
  const Poset& p = l.poset();
  std::ostringstream out;
  out << "order";
  for (const Label& lab : l.order()) out << ' ' << to_string(lab);
  out << "\n";
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end(), [&](auto a, auto b) {
    if (p.rank(a.first) != p.rank(b.first)) return p.rank(a.first) < p.rank(b.first);
    if (p.id(a.first) != p.id(b.first)) return p.id(a.first) < p.id(b.first);
    return p.id(a.second) < p.id(b.second);
  });
  for (auto [x, y] : covers)
    out << "label " << p.id(x) << " " << p.id(y) << " " << to_string(l.label(x, y)) << "\n";
  return out.str();
}

}  // namespace tcheb
