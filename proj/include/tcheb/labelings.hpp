#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "tcheb/poly.hpp"
#include "tcheb/poset.hpp"

namespace tcheb {

/// Edge label: a base token, optionally signed. The Tchebyshev labeling
/// signs every inherited label small or big and inserts an unsigned 0
/// between the two blocks.
struct Label {
  std::string base;
  enum class Sign { none, small, big } sign = Sign::none;
  auto operator<=>(const Label&) const = default;
};

Label zero_label();
std::string to_string(const Label& l);

using LabelString = std::vector<Label>;

/// A labeling of every Hasse edge of a poset together with the declared
/// linear order on its labels. The poset is shared so that constructions
/// like the Tchebyshev labeling can hand out a labeling of a poset they
/// built themselves.
class EdgeLabeling {
 public:
  EdgeLabeling(std::shared_ptr<const Poset> poset, std::map<std::pair<int, int>, Label> labels,
               std::vector<Label> order);

  const Poset& poset() const { return *poset_; }
  std::shared_ptr<const Poset> poset_ptr() const { return poset_; }
  const Label& label(int x, int y) const;
  const std::vector<Label>& order() const { return order_; }
  int order_index(const Label& l) const;
  bool label_leq(const Label& a, const Label& b) const { return order_index(a) <= order_index(b); }
  bool label_lt(const Label& a, const Label& b) const { return order_index(a) < order_index(b); }

 private:
  std::shared_ptr<const Poset> poset_;
  std::map<std::pair<int, int>, Label> labels_;
  std::vector<Label> order_;
  std::map<Label, int> order_index_;
};

/// R-labeling: every interval has exactly one maximal chain with weakly
/// rising labels. EL additionally requires the rising chain to be strictly
/// lexicographically least in its interval. Both checks enumerate every
/// interval of length <= rank_cap exhaustively.
bool is_R_labeling(const EdgeLabeling& l, int rank_cap = 6);
bool is_EL_labeling(const EdgeLabeling& l, int rank_cap = 6);

/// Label strings of all maximal chains of [x, y], as a sorted multiset.
std::vector<LabelString> jordan_holder(const EdgeLabeling& l, int x, int y);
std::vector<LabelString> jordan_holder(const EdgeLabeling& l);

/// Word u_1 ... u_{n-1} with u_i = a when s_i <= s_{i+1} and b otherwise.
Word descent_word(const EdgeLabeling& l, const LabelString& s);

/// Sum of descent words over the Jordan-Hoelder set; equals the ab-index
/// for any R-labeling.
AbPoly jh_ab_index(const EdgeLabeling& l);

/// The signed labeling of the Tchebyshev transform:
///   ([x,y], [y,w]) -> label(y,w) signed small,
///   ([x,y], [x,w]) -> label(y,w) signed big,
///   ([x,y], top)   -> 0,
/// ordered all-small < 0 < all-big. EL in, EL out.
EdgeLabeling tcheb_labeling(const Poset& p, const EdgeLabeling& l);

/// All interleavings of two strings (with multiplicity), and the shuffle
/// of two string multisets.
std::vector<LabelString> shuffle(const LabelString& x, const LabelString& y);
std::vector<LabelString> shuffle_sets(const std::vector<LabelString>& xs,
                                      const std::vector<LabelString>& ys);

/// Product labeling of P1 x P2: first-coordinate moves keep the P1 label,
/// second-coordinate moves the P2 label; bases are prefixed "1." / "2." to
/// keep the label sets disjoint and the order puts all P1 labels first.
EdgeLabeling cartesian_labeling(const EdgeLabeling& l1, const EdgeLabeling& l2);

/// Labeling of the dual diamond product for operands whose coatom-to-top
/// edges all carry the unsigned 0 label (as Tchebyshev labelings do). The
/// merged order is smalls of P1, smalls of P2, 0, bigs of P1, bigs of P2.
EdgeLabeling dual_diamond_labeling(const EdgeLabeling& l1, const EdgeLabeling& l2);

/// Bases prefixed (the unsigned 0 label is kept shared).
Label prefixed(const Label& l, const std::string& prefix);
LabelString prefixed(const LabelString& s, const std::string& prefix);
std::vector<LabelString> prefixed(const std::vector<LabelString>& set, const std::string& prefix);

/// JH(P)^{sb} concatenated with 0: every label signed both ways.
std::vector<LabelString> signed_expand_append_zero(const std::vector<LabelString>& jh);

/// Built-in labelings used by the verification suites.
EdgeLabeling boolean_labeling(int n);  // S < S + {i} labeled i; an EL-labeling
EdgeLabeling chain_labeling(int n);
EdgeLabeling ladder_labeling(int n);  // EL; see the construction note in the source

/// Labeling file format: `label <id1> <id2> <token>` lines plus one
/// `order <tok1> <tok2> ...` line; `#` comments and blank lines ignored.
EdgeLabeling parse_labeling(std::shared_ptr<const Poset> poset, const std::string& text);
std::string emit_labeling(const EdgeLabeling& l);

}  // namespace tcheb
