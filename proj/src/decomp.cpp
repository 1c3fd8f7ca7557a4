#include "tamari/decomp.hpp"

#include <optional>
#include <utility>
#include <vector>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

std::vector<int> dec_roots(const IntervalPoset& poset) {
  std::vector<int> roots;
  for (int v = 1; v <= poset.size(); ++v) {
    if (poset.dec_parent(v) == 0) roots.push_back(v);
  }
  return roots;
}

// Children counts in the final forest, indexed by vertex.
std::vector<int> dec_child_counts(const IntervalPoset& poset) {
  std::vector<int> counts(poset.size() + 1, 0);
  for (int v = 1; v <= poset.size(); ++v) {
    if (poset.dec_parent(v) != 0) ++counts[poset.dec_parent(v)];
  }
  return counts;
}

// Decodes a child-count sequence into the unique forest whose preorder is
// the label order; parent map or nothing when the counts are unrealizable.
std::optional<std::vector<int>> decode_preorder_counts(const std::vector<int>& counts) {
  int n = static_cast<int>(counts.size()) - 1;
  std::vector<int> parents(n + 1, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, children still owed)
  for (int v = 1; v <= n; ++v) {
    while (!stack.empty() && stack.back().second == 0) stack.pop_back();
    if (!stack.empty()) {
      parents[v] = stack.back().first;
      --stack.back().second;
    }
    stack.emplace_back(v, counts[v]);
  }
  while (!stack.empty() && stack.back().second == 0) stack.pop_back();
  if (!stack.empty()) return std::nullopt;
  return parents;
}

}  // namespace

IntervalPoset lc_compose(const IntervalPoset& i1, const IntervalPoset& i2, int r) {
  if (r < 0 || r > stat_trees(i2)) {
    throw DomainError(ErrorCode::ROutOfRange, "lc_compose: r outside 0..trees(i2)");
  }
  int n1 = i1.size();
  int k = n1 + 1;
  int n = n1 + 1 + i2.size();

  std::vector<std::pair<int, int>> relations = i1.cover_relations();
  for (const auto& [child, parent] : i2.cover_relations()) {
    relations.emplace_back(child + k, parent + k);
  }
  for (int y = 1; y <= n1; ++y) relations.emplace_back(y, k);
  auto roots = dec_roots(i2);
  for (int i = 0; i < r; ++i) relations.emplace_back(roots[i] + k, k);

  return IntervalPoset::validate(n, relations);
}

IntervalPoset lc_compose(const LCTriple& triple) {
  return lc_compose(triple.i1, triple.i2, triple.r);
}

LCTriple lc_decompose(const IntervalPoset& poset) {
  int n = poset.size();
  if (n == 0) throw DomainError(ErrorCode::EmptyPoset, "lc_decompose of empty poset");
  Closure closure = poset.closure();

  int k = 1;  // vertex 1 qualifies vacuously
  for (int v = 2; v <= n; ++v) {
    bool all = true;
    for (int i = 1; i < v && all; ++i) all = closure.prec(i, v);
    if (all) k = v;
  }

  LCTriple triple;
  triple.i1 = restrict_range(poset, 1, k - 1);
  triple.i2 = restrict_range(poset, k + 1, n);
  triple.r = 0;
  for (int v = 1; v <= n; ++v) {
    if (poset.dec_parent(v) == k) ++triple.r;
  }
  return triple;
}

IntervalPoset ir_insert(const IntervalPoset& i2, int r) {
  int ir2 = stat_ir(i2);
  if (r < 0 || r > ir2) {
    throw DomainError(ErrorCode::ROutOfRange, "ir_insert: r outside 0..ir(i2)");
  }
  int n2 = i2.size();
  int k = ir2 - r + 1;
  auto map = [k](int v) { return v < k ? v : v + 1; };

  std::vector<std::pair<int, int>> relations;
  for (int v = 1; v <= n2; ++v) {
    if (i2.inc_parent(v) != 0) relations.emplace_back(map(v), map(i2.inc_parent(v)));
  }
  if (k <= n2) relations.emplace_back(k, k + 1);

  auto old_counts = dec_child_counts(i2);
  std::vector<int> counts(n2 + 2, 0);
  for (int v = 1; v <= n2; ++v) counts[map(v)] = old_counts[v];
  auto parents = decode_preorder_counts(counts);
  if (!parents) {
    throw DomainError(ErrorCode::Internal, "ir_insert: child counts not realizable");
  }
  for (int v = 1; v <= n2 + 1; ++v) {
    if ((*parents)[v] != 0) relations.emplace_back(v, (*parents)[v]);
  }
  return IntervalPoset::validate(n2 + 1, relations);
}

IntervalPoset ir_compose(const IntervalPoset& i1, const IntervalPoset& i2, int r) {
  IntervalPoset block = ir_insert(i2, r);
  if (i1.size() == 0) return block;

  int a = stat_ir(i1);
  int m = block.size();
  int n1 = i1.size();
  auto map1 = [a, m](int v) { return v <= a ? v : v + m; };

  std::vector<std::pair<int, int>> relations;
  for (const auto& [child, parent] : i1.cover_relations()) {
    relations.emplace_back(map1(child), map1(parent));
  }
  for (const auto& [child, parent] : block.cover_relations()) {
    relations.emplace_back(child + a, parent + a);
  }
  for (int j = 1; j <= m; ++j) relations.emplace_back(j + a, a);
  if (a != n1) {
    int b = a + 1 + m;  // image of the old a+1
    for (int j = 1; j <= m; ++j) relations.emplace_back(j + a, b);
  }
  return IntervalPoset::validate(n1 + m, relations);
}

IntervalPoset ir_compose(const IRTriple& triple) {
  return ir_compose(triple.i1, triple.i2, triple.r);
}

namespace {

// Reverses ir_insert: drops the inserted vertex (its initial rise), restores
// labels, and decodes the remaining child counts. Nothing when the block
// cannot be an insertion image.
std::optional<std::pair<IntervalPoset, int>> try_remove_inserted(const IntervalPoset& block) {
  int m = block.size();
  if (m == 0) return std::nullopt;
  int k = stat_ir(block);

  // The inserted vertex has no final-forest children, exactly the added
  // increasing relation k -> k+1, and nothing pointing at it.
  for (int v = 1; v <= m; ++v) {
    if (v != k && block.inc_parent(v) == k) return std::nullopt;
    if (block.dec_parent(v) == k) return std::nullopt;
  }
  if (k < m && block.inc_parent(k) != k + 1) return std::nullopt;
  if (k == m && block.inc_parent(k) != 0) return std::nullopt;

  auto unmap = [k](int v) { return v < k ? v : v - 1; };
  std::vector<std::pair<int, int>> relations;
  for (int v = 1; v <= m; ++v) {
    if (v == k) continue;
    if (block.inc_parent(v) != 0) {
      relations.emplace_back(unmap(v), unmap(block.inc_parent(v)));
    }
  }
  auto block_counts = dec_child_counts(block);
  std::vector<int> counts(m, 0);
  for (int v = 1; v <= m; ++v) {
    if (v != k) counts[unmap(v)] = block_counts[v];
  }
  auto parents = decode_preorder_counts(counts);
  if (!parents) return std::nullopt;
  for (int v = 1; v <= m - 1; ++v) {
    if ((*parents)[v] != 0) relations.emplace_back(v, (*parents)[v]);
  }

  IntervalPoset i2;
  try {
    i2 = IntervalPoset::validate(m - 1, relations);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  int r = stat_ir(i2) - k + 1;
  if (r < 0 || r > stat_ir(i2)) return std::nullopt;
  return std::make_pair(std::move(i2), r);
}

// Extraction of the candidate grafted at vertex a with the given block span;
// nothing when the pieces do not recompose to the input.
std::optional<IRTriple> try_ir_candidate(const IntervalPoset& poset, const Closure& closure,
                                         int a, int block_end) {
  int n = poset.size();

  IntervalPoset block = restrict_range(poset, a + 1, block_end);
  auto removed = try_remove_inserted(block);
  if (!removed) return std::nullopt;

  IntervalPoset i1;
  if (a > 0) {
    // Prefix 1..a together with the suffix after the block, relabeled.
    int span = block_end - a;
    std::vector<std::pair<int, int>> relations;
    auto keep = [a, block_end](int v) { return v <= a || v > block_end; };
    auto relabel = [a, span, block_end](int v) { return v <= a ? v : v - span; };
    for (int u = 1; u <= n; ++u) {
      for (int v = 1; v <= n; ++v) {
        if (u != v && keep(u) && keep(v) && closure.prec(u, v)) {
          relations.emplace_back(relabel(u), relabel(v));
        }
      }
    }
    try {
      i1 = IntervalPoset::validate(n - span, relations);
    } catch (const DomainError&) {
      return std::nullopt;
    }
  } else if (block_end != n) {
    return std::nullopt;
  }

  IRTriple triple{std::move(i1), std::move(removed->first), removed->second};
  if (ir_compose(triple) != poset) return std::nullopt;
  return triple;
}

}  // namespace

IRTriple ir_decompose(const IntervalPoset& poset) {
  int n = poset.size();
  if (n == 0) throw DomainError(ErrorCode::EmptyPoset, "ir_decompose of empty poset");
  Closure closure = poset.closure();
  int ir = stat_ir(poset);

  // The grafting vertex a is the largest one preceded from above by the whole
  // initial-rise tail; its block is everything preceding it from above. The
  // recomposition check resolves the rare ambiguous candidates.
  for (int a = ir - 1; a >= 1; --a) {
    bool tail = true;
    for (int j = a + 1; j <= ir && tail; ++j) tail = closure.prec(j, a);
    if (!tail) continue;
    int block_end = a;
    while (block_end + 1 <= n && closure.prec(block_end + 1, a)) ++block_end;
    if (auto triple = try_ir_candidate(poset, closure, a, block_end)) {
      return std::move(*triple);
    }
  }
  // Pure insertion: the whole poset is the block.
  if (auto triple = try_ir_candidate(poset, closure, 0, n)) return std::move(*triple);
  throw DomainError(ErrorCode::Internal, "ir_decompose: no decomposition found");
}

IntervalPoset beta(const IntervalPoset& poset) {
  if (poset.size() == 0) return poset;
  LCTriple triple = lc_decompose(poset);
  return ir_compose(beta(triple.i1), beta(triple.i2), triple.r);
}

IntervalPoset beta_inverse(const IntervalPoset& poset) {
  if (poset.size() == 0) return poset;
  IRTriple triple = ir_decompose(poset);
  return lc_compose(beta_inverse(triple.i1), beta_inverse(triple.i2), triple.r);
}

}  // namespace tamari
