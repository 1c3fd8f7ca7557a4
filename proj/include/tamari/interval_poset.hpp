#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tamari/catalan.hpp"

namespace tamari {

// Transitive closure of a relation on labels 1..n. prec(a, b) reads "a
// precedes b".
class Closure {
 public:
  Closure(int n, std::span<const std::pair<int, int>> relations);

  int size() const { return n_; }
  bool prec(int a, int b) const { return matrix_[index(a, b)]; }

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>(a - 1) * n_ + (b - 1);
  }

  int n_;
  std::vector<char> matrix_;
};

// Poset on labels 1..n encoding a Tamari interval. Stored as the two cover
// maps: dec_parent(b) = a < b for the relation b -> a, inc_parent(a) = c > a
// for a -> c. Values are immutable once constructed; the closure is
// recomputed on demand.
class IntervalPoset {
 public:
  IntervalPoset() = default;  // empty poset

  // Canonical constructor: accepts any relation list over 1..n (covers or
  // closure-redundant), validates the interval-poset axioms, and reduces to
  // the cover maps. Throws DomainError with Cycle / AxiomViolation /
  // DuplicateParent / OutOfRange.
  static IntervalPoset validate(int n, std::span<const std::pair<int, int>> relations);

  int size() const { return n_; }
  // 0 when the vertex has no parent in that forest.
  int dec_parent(int v) const { return dec_parent_[v]; }
  int inc_parent(int v) const { return inc_parent_[v]; }

  // All cover pairs (child, parent), dec covers then inc covers, each in
  // ascending child order.
  std::vector<std::pair<int, int>> cover_relations() const;

  Closure closure() const;

  bool operator==(const IntervalPoset& other) const = default;

 private:
  int n_ = 0;
  std::vector<int> dec_parent_{0};  // index 0 unused
  std::vector<int> inc_parent_{0};
};

struct IntervalStats {
  int size = 0;
  int trees = 0;
  int ir = 0;
  bool operator==(const IntervalStats&) const = default;
};

// Interval-poset of the Tamari interval [lower, upper]: all relations of
// dec(lower) and inc(upper). Throws NotAnInterval when lower is not below
// upper, SizeMismatch on different sizes.
IntervalPoset from_tree_pair(const BinaryTree& lower, const BinaryTree& upper);

BinaryTree lower_tree(const IntervalPoset& poset);
BinaryTree upper_tree(const IntervalPoset& poset);

// Number of components of the final forest.
int stat_trees(const IntervalPoset& poset);
// Largest k such that no relation (v-1) -> v holds for 2 <= v <= k.
int stat_ir(const IntervalPoset& poset);
IntervalStats interval_stats(const IntervalPoset& poset);

// Order test by interval-poset construction.
bool tamari_leq(const BinaryTree& lower, const BinaryTree& upper);

// Subposet on the label range [lo, hi], relabeled to 1..hi-lo+1.
IntervalPoset restrict_range(const IntervalPoset& poset, int lo, int hi);

// Final/initial forests of the poset; labels are preorder respectively
// postorder, as for trees.
PlanarForest dec_forest_of_poset(const IntervalPoset& poset);
PlanarForest inc_forest_of_poset(const IntervalPoset& poset);

// Text format `n ":" [pair {"," pair}]` with `pair := a "->" b` meaning
// a precedes b; rendering emits the cover maps only, dec covers first.
std::string render_poset(const IntervalPoset& poset);
IntervalPoset parse_poset(const std::string& text);

}  // namespace tamari
