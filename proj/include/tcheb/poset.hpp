#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcheb/checked_int.hpp"
#include "tcheb/errors.hpp"

namespace tcheb {

/// Finite graded bounded poset: opaque string ids, cover relation, ranks
/// inferred as longest chain from the bottom. Validated on construction
/// (unique bottom/top, acyclic covers, every cover raises rank by one) and
/// immutable afterwards; all queries are safe for concurrent use.
class Poset {
 public:
  /// Builds and validates a poset from explicit elements plus covers given
  /// as index pairs into `ids`.
  Poset(std::vector<std::string> ids, std::vector<std::pair<int, int>> covers);

  static Poset from_covers(const std::vector<std::string>& extra_elements,
                           const std::vector<std::pair<std::string, std::string>>& covers);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int x) const { return ids_[x]; }
  int index_of(const std::string& id) const;

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int rank(int x) const { return rank_[x]; }
  /// rho(P), the rank of the top element.
  int height() const { return rank_[top_]; }
  /// rho(x, y) for x <= y.
  int rank_between(int x, int y) const { return rank_[y] - rank_[x]; }

  const std::vector<int>& upper_covers(int x) const { return up_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_[x]; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  std::vector<int> elements_of_rank(int r) const;

  bool less(int x, int y) const { return lt_[x][y]; }
  bool leq(int x, int y) const { return x == y || lt_[x][y]; }

 private:
  std::vector<std::string> ids_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;
  std::vector<std::vector<bool>> lt_;
  int bottom_ = -1, top_ = -1;
};

/// Line-oriented poset file format: `elem <id>`, `cover <id1> <id2>`,
/// `#` comments and blank lines ignored.
Poset parse_poset(const std::string& text);

/// Writes the same format with elements sorted by (rank, id).
std::string emit_poset(const Poset& p);

/// Subset lattice of [n], ranked by cardinality.
Poset boolean_algebra(int n);

/// Chain with n+1 elements (rank n).
Poset chain(int n);

/// Rank n+1 poset with two elements at each rank 1..n and all covers
/// between consecutive ranks; its cd-index is c^n.
Poset ladder(int n);

/// Face lattice of the n-dimensional crosspolytope: signed subsets of [n]
/// ordered by restriction, plus a top element.
Poset crosspolytope(int n);

Poset cartesian_product(const Poset& p, const Poset& q);

/// P <> Q = (P - 0) x (Q - 0) with a new bottom; both operands need rank >= 1.
Poset diamond_product(const Poset& p, const Poset& q);

/// P <>* Q = (P - 1) x (Q - 1) with a new top; equals (P* <> Q*)*.
Poset dual_diamond_product(const Poset& p, const Poset& q);

Poset dual(const Poset& p);

/// Closed interval [x, y] as a poset of its own; requires x <= y.
Poset interval(const Poset& p, int x, int y);

/// Moebius function via the standard recursion; requires x <= y.
Int mobius(const Poset& p, int x, int y);

/// Eulerian test via mu(x, y) = (-1)^rho(x,y) on every interval, which is
/// equivalent to the even/odd rank-count definition and cheaper to check.
bool is_eulerian(const Poset& p);

/// Seed-deterministic random graded poset: rank levels of size <= width,
/// covers kept with probability 1/2, then repaired so each element has a
/// cover below and above (uniform choice of missing cover).
Poset random_graded_poset(int max_rank, int width, std::uint64_t seed);

/// Tchebyshev transform with element bookkeeping: pairs[i] is ([x, y]) for
/// element i of the transform, with x = -1 encoding the adjoined minimum
/// and top_index the adjoined maximum (whose pair entry is {-2, -2}).
struct TchebPoset {
  Poset poset;
  std::vector<std::pair<int, int>> pairs;
  int top_index;
};

TchebPoset tchebyshev_poset_mapped(const Poset& p);

/// Poset on the intervals [x, y] of P with the adjoined minimum, covers
/// [x,y] < [y,w], [x,y] < [x,w] for y -< w, and [x,1] < new top; requires
/// rank(P) >= 1.
Poset tchebyshev_poset(const Poset& p);

/// All chains bottom = x_0 < x_1 < ... < x_k = top, as index sequences.
std::vector<std::vector<int>> all_chains(const Poset& p);

}  // namespace tcheb
