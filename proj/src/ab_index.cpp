#include "tcheb/ab_index.hpp"

#include <vector>

namespace tcheb {

std::map<std::set<int>, Int> flag_f_vector(const Poset& p) {
  int rho = p.height();
  if (rho < 1) throw RankZeroInput("flag_f_vector requires rank >= 1");
  std::map<std::set<int>, Int> f;
  int m = rho - 1;
  for (int mask = 0; mask < (1 << m); ++mask) {
    std::set<int> s;
    std::vector<int> ranks;
    for (int i = 0; i < m; ++i)
      if (mask & (1 << i)) {
        s.insert(i + 1);
        ranks.push_back(i + 1);
      }
    // chains hitting exactly these middle ranks
    std::vector<std::pair<int, Int>> frontier{{p.bottom(), 1}};
    for (int r : ranks) {
      std::vector<std::pair<int, Int>> next;
      for (int y : p.elements_of_rank(r)) {
        Int count = 0;
        for (const auto& [x, c] : frontier)
          if (p.less(x, y)) count = checked_add(count, c);
        if (count != 0) next.emplace_back(y, count);
      }
      frontier = std::move(next);
    }
    Int total = 0;
    for (const auto& [x, c] : frontier)
      if (p.leq(x, p.top())) total = checked_add(total, c);
    f[s] = total;
  }
  return f;
}

AbPoly ab_index(const Poset& p) {
  int rho = p.height();
  if (rho < 1) throw RankZeroInput("ab_index requires rank >= 1");
  auto f = flag_f_vector(p);
  int m = rho - 1;
  AbPoly psi;
  for (const auto& [s, fs] : f) {
    (void)fs;
    // h_S = sum_{T subset of S} (-1)^{|S - T|} f_T
    Int h = 0;
    std::vector<int> elems(s.begin(), s.end());
    int k = static_cast<int>(elems.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::set<int> t;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) t.insert(elems[i]);
      Int sign = ((k - __builtin_popcount(static_cast<unsigned>(mask))) % 2 == 0) ? 1 : -1;
      h = checked_add(h, checked_mul(sign, f.at(t)));
    }
    Word w(m, 'a');
    for (int i : s) w[i - 1] = 'b';
    psi.add_term(std::move(w), h);
  }
  return psi;
}

}  // namespace tcheb
