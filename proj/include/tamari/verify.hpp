#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tamari/bigint.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/poly.hpp"

namespace tamari {

// Generates interval-posets through the lower-contacts recursion: every
// poset of size n arises exactly once as LC(i1, i2, r) over the size splits.
// Keeps every size built so far; not meant to be shared across threads.
class PosetEnumerator {
 public:
  const std::vector<IntervalPoset>& posets_of_size(int n);

 private:
  std::map<int, std::vector<IntervalPoset>> cache_;
};

// Convenience wrapper over a fresh enumerator.
std::vector<IntervalPoset> enumerate_interval_posets(int n);

// Closed form 2/(n(n+1)) * C(4n+1, n-1); the division is checked exact.
BigInt count_formula(int n);

struct SizeReport {
  int n = 0;
  BigInt enumerated;
  BigInt formula;
  bool match = false;
};

SizeReport count_report(int n, PosetEnumerator& enumerator);

// Generating function truncation: sum of y^size x^trees z^ir over all
// interval-posets of size <= max_n.
TriPoly phi(int max_n);
TriPoly phi(int max_n, PosetEnumerator& enumerator);

// Phi invariance under exchanging the x and z exponents.
bool check_symmetry(int max_n);

// Both functional equations evaluated on the truncation and compared up to
// y-degree max_n: first the catalytic equation with the Phi(y;x,1) prefactor,
// then the two-term variant. Cross terms of higher degree are discarded
// before comparison.
std::pair<bool, bool> check_functional_equations(int max_n);

// Per size n <= max_n: beta(beta(I)) = I for every poset of that size, and
// the IR-decompose/LC-recompose recursion agrees with beta.
std::vector<std::pair<int, bool>> check_beta_involution(int max_n);

// All ordered forests with up to max_forest_size nodes: the closed-flow
// count must equal the size of the Tamari ideal below the matching tree.
bool check_flow_theorem(int max_forest_size);

// All ordered forests on n nodes, one per binary tree of size n.
std::vector<PlanarForest> enumerate_forests(int n);

}  // namespace tamari
