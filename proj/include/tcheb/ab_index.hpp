#pragma once

#include <map>
#include <set>

#include "tcheb/poly.hpp"
#include "tcheb/poset.hpp"

namespace tcheb {

/// Flag f-vector: f_S = number of chains visiting exactly the ranks in
/// S, for S a subset of {1, ..., rho(P)-1}; computed by dynamic programming
/// on rank-restricted reachability. Requires rho(P) >= 1.
std::map<std::set<int>, Int> flag_f_vector(const Poset& p);

/// ab-index Psi(P), homogeneous of degree rho(P)-1: flag f to flag h by
/// inclusion-exclusion, then h_S times the word with b exactly at the
/// positions in S. Requires rho(P) >= 1.
AbPoly ab_index(const Poset& p);

}  // namespace tcheb
