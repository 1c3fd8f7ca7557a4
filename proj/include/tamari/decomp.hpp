#pragma once

#include "tamari/interval_poset.hpp"

namespace tamari {

// Lower-contacts decomposition triple: 0 <= r <= trees(i2).
struct LCTriple {
  IntervalPoset i1;
  IntervalPoset i2;
  int r = 0;
  bool operator==(const LCTriple&) const = default;
};

// Initial-rise decomposition triple: 0 <= r <= ir(i2).
struct IRTriple {
  IntervalPoset i1;
  IntervalPoset i2;
  int r = 0;
  bool operator==(const IRTriple&) const = default;
};

// Shifted concatenation of i1, a new root vertex k = size(i1)+1, and i2;
// every vertex of i1 precedes k and the r smallest final-forest roots of the
// shifted i2 precede k from above. Throws ROutOfRange.
IntervalPoset lc_compose(const IntervalPoset& i1, const IntervalPoset& i2, int r);
IntervalPoset lc_compose(const LCTriple& triple);

// Inverse of lc_compose; the root k is the largest vertex preceded by every
// smaller one. Throws EmptyPoset.
LCTriple lc_decompose(const IntervalPoset& poset);

// Inserts a new vertex at label k = ir(i2) - r + 1: increasing relations are
// carried over plus k -> k+1 whenever vertex k+1 exists, and the final
// forest is rebuilt so every former vertex keeps its child count. Afterwards
// ir grows to ir(i2) + 1 - r. Throws ROutOfRange.
IntervalPoset ir_insert(const IntervalPoset& i2, int r);

// Initial-rise composition: inserts into i2, then grafts the result right
// after vertex a = ir(i1), with decreasing relations from the whole block to
// a and, when a is not the last vertex of i1, increasing relations from the
// block to the vertex that follows it. Throws ROutOfRange.
IntervalPoset ir_compose(const IntervalPoset& i1, const IntervalPoset& i2, int r);
IntervalPoset ir_compose(const IRTriple& triple);

// Exact inverse of ir_compose. The grafting vertex is located by scanning
// candidates downward and keeping the unique one whose extracted triple
// recomposes to the input. Throws EmptyPoset.
IRTriple ir_decompose(const IntervalPoset& poset);

// The statistic-swapping bijection: LC-decompose, map the parts, IR-compose.
// Exchanges trees and ir.
IntervalPoset beta(const IntervalPoset& poset);

// Inverse recursion with the two decompositions exchanged.
IntervalPoset beta_inverse(const IntervalPoset& poset);

}  // namespace tamari
