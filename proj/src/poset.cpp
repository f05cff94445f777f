#include "tcheb/poset.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <sstream>

namespace tcheb {

Poset::Poset(std::vector<std::string> ids, std::vector<std::pair<int, int>> covers)
    : ids_(std::move(ids)), covers_(std::move(covers)) {
  const int n = size();
  if (n == 0) throw NotBounded("poset has no elements");
  std::sort(covers_.begin(), covers_.end());
  covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
  up_.assign(n, {});
  down_.assign(n, {});
  for (auto [x, y] : covers_) {
    if (x == y) throw CycleDetected("cover relation " + ids_[x] + " < " + ids_[x]);
    up_[x].push_back(y);
    down_[y].push_back(x);
  }
  for (int x = 0; x < n; ++x) {
    std::sort(up_[x].begin(), up_[x].end());
    up_[x].erase(std::unique(up_[x].begin(), up_[x].end()), up_[x].end());
    std::sort(down_[x].begin(), down_[x].end());
    down_[x].erase(std::unique(down_[x].begin(), down_[x].end()), down_[x].end());
  }

  // Kahn topological order; leftovers mean a directed cycle.
  std::vector<int> indeg(n, 0), topo;
  topo.reserve(n);
  for (int x = 0; x < n; ++x) indeg[x] = static_cast<int>(down_[x].size());
  std::queue<int> q;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) q.push(x);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    topo.push_back(x);
    for (int y : up_[x])
      if (--indeg[y] == 0) q.push(y);
  }
  if (static_cast<int>(topo.size()) != n) throw CycleDetected("cover relation contains a cycle");

  int minimal = 0, maximal = 0;
  for (int x = 0; x < n; ++x) {
    if (down_[x].empty()) {
      ++minimal;
      bottom_ = x;
    }
    if (up_[x].empty()) {
      ++maximal;
      top_ = x;
    }
  }
  if (minimal != 1)
    throw NotBounded("expected exactly one minimal element, found " + std::to_string(minimal));
  if (maximal != 1)
    throw NotBounded("expected exactly one maximal element, found " + std::to_string(maximal));

  // Rank = longest chain from the bottom, then gradedness: covers raise
  // rank by exactly one.
  rank_.assign(n, 0);
  for (int x : topo)
    for (int y : up_[x]) rank_[y] = std::max(rank_[y], rank_[x] + 1);
  for (auto [x, y] : covers_)
    if (rank_[y] != rank_[x] + 1)
      throw NotGraded("cover " + ids_[x] + " < " + ids_[y] + " skips rank " +
                      std::to_string(rank_[x] + 1));

  // Strict-order closure.
  lt_.assign(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int x = *it;
    for (int y : up_[x]) {
      lt_[x][y] = true;
      for (int z = 0; z < n; ++z)
        if (lt_[y][z]) lt_[x][z] = true;
    }
  }
}

Poset Poset::from_covers(const std::vector<std::string>& extra_elements,
                         const std::vector<std::pair<std::string, std::string>>& covers) {
  std::vector<std::string> ids;
  std::map<std::string, int> index;
  auto intern = [&](const std::string& id) {
    auto [it, inserted] = index.emplace(id, static_cast<int>(ids.size()));
    if (inserted) ids.push_back(id);
    return it->second;
  };
  for (const auto& id : extra_elements) intern(id);
  std::vector<std::pair<int, int>> cover_idx;
  cover_idx.reserve(covers.size());
  for (const auto& [x, y] : covers) cover_idx.emplace_back(intern(x), intern(y));
  return Poset(std::move(ids), std::move(cover_idx));
}

int Poset::index_of(const std::string& id) const {
  for (int x = 0; x < size(); ++x)
    if (ids_[x] == id) return x;
  throw BadParameter("unknown element id: " + id);
}

std::vector<int> Poset::elements_of_rank(int r) const {
  std::vector<int> xs;
  for (int x = 0; x < size(); ++x)
    if (rank_[x] == r) xs.push_back(x);
  return xs;
}

Poset parse_poset(const std::string& text) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, std::string>> covers;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    if (keyword[0] == '#') continue;
    if (keyword == "elem") {
      std::string id;
      if (!(ls >> id)) throw MalformedLine("line " + std::to_string(lineno) + ": elem needs an id");
      std::string extra;
      if (ls >> extra) throw MalformedLine("line " + std::to_string(lineno) + ": trailing tokens");
      elems.push_back(id);
    } else if (keyword == "cover") {
      std::string a, b;
      if (!(ls >> a >> b))
        throw MalformedLine("line " + std::to_string(lineno) + ": cover needs two ids");
      std::string extra;
      if (ls >> extra) throw MalformedLine("line " + std::to_string(lineno) + ": trailing tokens");
      covers.emplace_back(a, b);
    } else {
      throw MalformedLine("line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
    }
  }
  return Poset::from_covers(elems, covers);
}

std::string emit_poset(const Poset& p) {
  std::vector<int> order(p.size());
  for (int x = 0; x < p.size(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (p.rank(x) != p.rank(y)) return p.rank(x) < p.rank(y);
    return p.id(x) < p.id(y);
  });
  std::ostringstream out;
  for (int x : order) out << "elem " << p.id(x) << "\n";
  std::vector<std::pair<int, int>> covers = p.covers();
  std::sort(covers.begin(), covers.end(), [&](auto l, auto r) {
    if (p.rank(l.first) != p.rank(r.first)) return p.rank(l.first) < p.rank(r.first);
    if (p.id(l.first) != p.id(r.first)) return p.id(l.first) < p.id(r.first);
    return p.id(l.second) < p.id(r.second);
  });
  for (auto [x, y] : covers) out << "cover " << p.id(x) << " " << p.id(y) << "\n";
  return out.str();
}

namespace {

std::string subset_id(int mask, int n) {
  std::string id = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (mask & (1 << i)) {
      if (!first) id += ',';
      id += std::to_string(i + 1);
      first = false;
    }
  return id + "}";
}

}  // namespace

Poset boolean_algebra(int n) {
  if (n < 0) throw BadParameter("boolean_algebra requires n >= 0");
  if (n > 20) throw BadParameter("boolean_algebra: n too large");
  std::vector<std::string> ids;
  ids.reserve(std::size_t{1} << n);
  for (int mask = 0; mask < (1 << n); ++mask) ids.push_back(subset_id(mask, n));
  std::vector<std::pair<int, int>> covers;
  for (int mask = 0; mask < (1 << n); ++mask)
    for (int i = 0; i < n; ++i)
      if (!(mask & (1 << i))) covers.emplace_back(mask, mask | (1 << i));
  return Poset(std::move(ids), std::move(covers));
}

Poset chain(int n) {
  if (n < 0) throw BadParameter("chain requires n >= 0");
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i <= n; ++i) ids.push_back(std::to_string(i));
  for (int i = 0; i < n; ++i) covers.emplace_back(i, i + 1);
  return Poset(std::move(ids), std::move(covers));
}

Poset ladder(int n) {
  if (n < 0) throw BadParameter("ladder requires n >= 0");
  std::vector<std::string> ids{"bot"};
  std::vector<std::pair<int, int>> covers;
  // two elements per middle rank: indices 1 + 2(k-1) and 2 + 2(k-1)
  for (int k = 1; k <= n; ++k) {
    ids.push_back("l" + std::to_string(k));
    ids.push_back("r" + std::to_string(k));
  }
  ids.push_back("top");
  int top = static_cast<int>(ids.size()) - 1;
  auto level = [&](int k, int side) { return 1 + 2 * (k - 1) + side; };
  if (n == 0) {
    covers.emplace_back(0, top);
  } else {
    covers.emplace_back(0, level(1, 0));
    covers.emplace_back(0, level(1, 1));
    for (int k = 1; k < n; ++k)
      for (int s = 0; s < 2; ++s)
        for (int t = 0; t < 2; ++t) covers.emplace_back(level(k, s), level(k + 1, t));
    covers.emplace_back(level(n, 0), top);
    covers.emplace_back(level(n, 1), top);
  }
  return Poset(std::move(ids), std::move(covers));
}

Poset crosspolytope(int n) {
  if (n < 1) throw BadParameter("crosspolytope requires n >= 1");
  if (n > 12) throw BadParameter("crosspolytope: n too large");
  // faces are sign vectors in {0, +, -}^n; encode base-3
  auto face_id = [&](const std::vector<int>& sign) {
    std::string id = "{";
    bool first = true;
    for (int i = 0; i < n; ++i) {
      if (sign[i] == 0) continue;
      if (!first) id += ',';
      id += (sign[i] > 0 ? "+" : "-") + std::to_string(i + 1);
      first = false;
    }
    return id + "}";
  };
  std::vector<std::vector<int>> faces;
  std::vector<int> current(n, 0);
  // enumerate all sign vectors
  while (true) {
    faces.push_back(current);
    int i = 0;
    while (i < n && current[i] == 2) current[i++] = 0;
    if (i == n) break;
    ++current[i];
  }
  std::map<std::vector<int>, int> index;
  std::vector<std::string> ids;
  for (const auto& f : faces) {
    index[f] = static_cast<int>(ids.size());
    std::vector<int> sign(n);
    for (int i = 0; i < n; ++i) sign[i] = f[i] == 0 ? 0 : (f[i] == 1 ? 1 : -1);
    ids.push_back(face_id(sign));
  }
  ids.push_back("top");
  int top = static_cast<int>(ids.size()) - 1;
  std::vector<std::pair<int, int>> covers;
  for (const auto& f : faces) {
    int support = 0;
    for (int v : f) support += v != 0;
    if (support == n) {
      covers.emplace_back(index.at(f), top);
      continue;
    }
    for (int i = 0; i < n; ++i) {
      if (f[i] != 0) continue;
      for (int s = 1; s <= 2; ++s) {
        auto g = f;
        g[i] = s;
        covers.emplace_back(index.at(f), index.at(g));
      }
    }
  }
  return Poset(std::move(ids), std::move(covers));
}

namespace {

std::string pair_id(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

}  // namespace

Poset cartesian_product(const Poset& p, const Poset& q) {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(p.size()) * q.size());
  auto idx = [&](int x, int y) { return x * q.size() + y; };
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < q.size(); ++y) ids.push_back(pair_id(p.id(x), q.id(y)));
  std::vector<std::pair<int, int>> covers;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < q.size(); ++y) {
      for (int x2 : p.upper_covers(x)) covers.emplace_back(idx(x, y), idx(x2, y));
      for (int y2 : q.upper_covers(y)) covers.emplace_back(idx(x, y), idx(x, y2));
    }
  return Poset(std::move(ids), std::move(covers));
}

Poset diamond_product(const Poset& p, const Poset& q) {
  if (p.height() < 1 || q.height() < 1)
    throw RankZeroOperand("diamond product requires both operands of rank >= 1");
  std::vector<std::string> ids{"_bot_"};
  std::vector<std::pair<int, int>> covers;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < p.size(); ++x) {
    if (x == p.bottom()) continue;
    for (int y = 0; y < q.size(); ++y) {
      if (y == q.bottom()) continue;
      index[{x, y}] = static_cast<int>(ids.size());
      ids.push_back(pair_id(p.id(x), q.id(y)));
    }
  }
  for (const auto& [xy, i] : index) {
    auto [x, y] = xy;
    if (p.rank(x) == 1 && q.rank(y) == 1) covers.emplace_back(0, i);
    for (int x2 : p.upper_covers(x)) covers.emplace_back(i, index.at({x2, y}));
    for (int y2 : q.upper_covers(y)) covers.emplace_back(i, index.at({x, y2}));
  }
  return Poset(std::move(ids), std::move(covers));
}

Poset dual_diamond_product(const Poset& p, const Poset& q) {
  if (p.height() < 1 || q.height() < 1)
    throw RankZeroOperand("dual diamond product requires both operands of rank >= 1");
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> covers;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < p.size(); ++x) {
    if (x == p.top()) continue;
    for (int y = 0; y < q.size(); ++y) {
      if (y == q.top()) continue;
      index[{x, y}] = static_cast<int>(ids.size());
      ids.push_back(pair_id(p.id(x), q.id(y)));
    }
  }
  ids.push_back("_top_");
  int top = static_cast<int>(ids.size()) - 1;
  for (const auto& [xy, i] : index) {
    auto [x, y] = xy;
    if (p.rank(x) == p.height() - 1 && q.rank(y) == q.height() - 1) covers.emplace_back(i, top);
    for (int x2 : p.upper_covers(x))
      if (x2 != p.top()) covers.emplace_back(i, index.at({x2, y}));
    for (int y2 : q.upper_covers(y))
      if (y2 != q.top()) covers.emplace_back(i, index.at({x, y2}));
  }
  return Poset(std::move(ids), std::move(covers));
}

Poset dual(const Poset& p) {
  std::vector<std::string> ids;
  ids.reserve(p.size());
  for (int x = 0; x < p.size(); ++x) ids.push_back(p.id(x));
  std::vector<std::pair<int, int>> covers;
  covers.reserve(p.covers().size());
  for (auto [x, y] : p.covers()) covers.emplace_back(y, x);
  return Poset(std::move(ids), std::move(covers));
}

Poset interval(const Poset& p, int x, int y) {
  if (!p.leq(x, y)) throw NotComparable(p.id(x) + " and " + p.id(y) + " are not comparable");
  std::vector<int> members;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) members.push_back(z);
  std::vector<int> local(p.size(), -1);
  std::vector<std::string> ids;
  for (int z : members) {
    local[z] = static_cast<int>(ids.size());
    ids.push_back(p.id(z));
  }
  std::vector<std::pair<int, int>> covers;
  for (auto [u, v] : p.covers())
    if (local[u] >= 0 && local[v] >= 0) covers.emplace_back(local[u], local[v]);
  return Poset(std::move(ids), std::move(covers));
}

Int mobius(const Poset& p, int x, int y) {
  if (!p.leq(x, y)) throw NotComparable(p.id(x) + " and " + p.id(y) + " are not comparable");
  // mu(x, z) for all z in [x, y], filled in rank order
  std::vector<int> zs;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(x, z) && p.leq(z, y)) zs.push_back(z);
  std::sort(zs.begin(), zs.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
  std::map<int, Int> mu;
  for (int z : zs) {
    if (z == x) {
      mu[z] = 1;
      continue;
    }
    Int total = 0;
    for (int w : zs)
      if (p.leq(w, z) && w != z) total = checked_add(total, mu.at(w));
    mu[z] = checked_neg(total);
  }
  return mu.at(y);
}

bool is_eulerian(const Poset& p) {
  const int n = p.size();
  // mu over every interval, bottom-up per base element
  for (int x = 0; x < n; ++x) {
    std::vector<int> zs;
    for (int z = 0; z < n; ++z)
      if (p.leq(x, z)) zs.push_back(z);
    std::sort(zs.begin(), zs.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
    std::map<int, Int> mu;
    for (int z : zs) {
      if (z == x) {
        mu[z] = 1;
        continue;
      }
      Int total = 0;
      for (int w : zs)
        if (w != z && p.leq(w, z)) total = checked_add(total, mu.at(w));
      mu[z] = checked_neg(total);
      int rho = p.rank_between(x, z);
      if (mu[z] != (rho % 2 == 0 ? 1 : -1)) return false;
    }
  }
  return true;
}

Poset random_graded_poset(int max_rank, int width, std::uint64_t seed) {
  if (max_rank < 1) throw BadParameter("random_graded_poset requires max_rank >= 1");
  if (width < 1) throw BadParameter("random_graded_poset requires width >= 1");
  std::mt19937_64 rng(seed);
  int height = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_rank));
  std::vector<std::vector<int>> levels(height + 1);
  std::vector<std::string> ids;
  for (int r = 0; r <= height; ++r) {
    int count = (r == 0 || r == height) ? 1 : 1 + static_cast<int>(rng() % width);
    for (int i = 0; i < count; ++i) {
      levels[r].push_back(static_cast<int>(ids.size()));
      ids.push_back("n" + std::to_string(r) + "_" + std::to_string(i));
    }
  }
  std::vector<std::vector<bool>> has(ids.size(), std::vector<bool>(ids.size(), false));
  for (int r = 0; r < height; ++r)
    for (int u : levels[r])
      for (int v : levels[r + 1])
        if (rng() & 1) has[u][v] = true;
  // repair: every non-bottom element covers something ...
  for (int r = 1; r <= height; ++r)
    for (int v : levels[r]) {
      bool covered = false;
      for (int u : levels[r - 1]) covered = covered || has[u][v];
      if (!covered) has[levels[r - 1][rng() % levels[r - 1].size()]][v] = true;
    }
  // ... and every non-top element is covered
  for (int r = 0; r < height; ++r)
    for (int u : levels[r]) {
      bool covers_up = false;
      for (int v : levels[r + 1]) covers_up = covers_up || has[u][v];
      if (!covers_up) has[u][levels[r + 1][rng() % levels[r + 1].size()]] = true;
    }
  std::vector<std::pair<int, int>> covers;
  for (std::size_t u = 0; u < ids.size(); ++u)
    for (std::size_t v = 0; v < ids.size(); ++v)
      if (has[u][v]) covers.emplace_back(static_cast<int>(u), static_cast<int>(v));
  return Poset(std::move(ids), std::move(covers));
}

TchebPoset tchebyshev_poset_mapped(const Poset& p) {
  if (p.height() < 1) throw RankZeroInput("Tchebyshev transform requires rank >= 1");
  // elements [x, y] with x < y in P + adjoined minimum (x = -1)
  std::vector<std::string> ids;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
  auto add_elem = [&](int x, int y) {
    index[{x, y}] = static_cast<int>(ids.size());
    ids.push_back("[" + (x < 0 ? std::string("*") : p.id(x)) + "," + p.id(y) + "]");
    pairs.emplace_back(x, y);
  };
  for (int y = 0; y < p.size(); ++y) {
    add_elem(-1, y);
    for (int x = 0; x < p.size(); ++x)
      if (p.less(x, y)) add_elem(x, y);
  }
  ids.push_back("1hat");
  pairs.emplace_back(-2, -2);
  int top = static_cast<int>(ids.size()) - 1;

  std::vector<std::pair<int, int>> covers;
  for (const auto& [xy, i] : index) {
    auto [x, y] = xy;
    for (int w : p.upper_covers(y)) {
      covers.emplace_back(i, index.at({y, w}));
      covers.emplace_back(i, index.at({x, w}));
    }
    if (y == p.top()) covers.emplace_back(i, top);
  }
  return TchebPoset{Poset(std::move(ids), std::move(covers)), std::move(pairs), top};
}

Poset tchebyshev_poset(const Poset& p) { return tchebyshev_poset_mapped(p).poset; }

std::vector<std::vector<int>> all_chains(const Poset& p) {
  std::vector<std::vector<int>> chains;
  std::vector<int> current{p.bottom()};
  // depth-first over strictly increasing extensions ending at the top
  auto recurse = [&](auto&& self, int last) -> void {
    if (last == p.top()) {
      chains.push_back(current);
      return;
    }
    for (int next = 0; next < p.size(); ++next) {
      if (!p.less(last, next)) continue;
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  recurse(recurse, p.bottom());
  return chains;
}

}  // namespace tcheb
