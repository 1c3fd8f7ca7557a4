#include "tamari/interval_poset.hpp"

#include <cctype>
#include <string>

#include "tamari/errors.hpp"

namespace tamari {

Closure::Closure(int n, std::span<const std::pair<int, int>> relations)
    : n_(n), matrix_(static_cast<std::size_t>(n) * n, 0) {
  for (const auto& [a, b] : relations) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw DomainError(ErrorCode::OutOfRange, "relation label out of 1..n");
    }
    if (a != b) matrix_[index(a, b)] = 1;
  }
  // Floyd-Warshall; n stays small throughout the library.
  for (int k = 1; k <= n; ++k) {
    for (int a = 1; a <= n; ++a) {
      if (!matrix_[index(a, k)]) continue;
      for (int b = 1; b <= n; ++b) {
        if (matrix_[index(k, b)]) matrix_[index(a, b)] = 1;
      }
    }
  }
}

IntervalPoset IntervalPoset::validate(int n,
                                      std::span<const std::pair<int, int>> relations) {
  if (n < 0) throw DomainError(ErrorCode::OutOfRange, "negative size");
  Closure closure(n, relations);

  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (closure.prec(a, b) && closure.prec(b, a)) {
        throw DomainError(ErrorCode::Cycle,
                          "cycle through " + std::to_string(a) + " and " +
                              std::to_string(b));
      }
    }
  }

  // Interval-poset axioms: a -> c forces b -> c and c -> a forces b -> a for
  // every b strictly between a and c.
  for (int a = 1; a <= n; ++a) {
    for (int c = a + 1; c <= n; ++c) {
      if (closure.prec(a, c)) {
        for (int b = a + 1; b < c; ++b) {
          if (!closure.prec(b, c)) {
            throw DomainError(
                ErrorCode::AxiomViolation,
                "increasing axiom: " + std::to_string(a) + "->" + std::to_string(c) +
                    " requires " + std::to_string(b) + "->" + std::to_string(c));
          }
        }
      }
      if (closure.prec(c, a)) {
        for (int b = a + 1; b < c; ++b) {
          if (!closure.prec(b, a)) {
            throw DomainError(
                ErrorCode::AxiomViolation,
                "decreasing axiom: " + std::to_string(c) + "->" + std::to_string(a) +
                    " requires " + std::to_string(b) + "->" + std::to_string(a));
          }
        }
      }
    }
  }

  IntervalPoset poset;
  poset.n_ = n;
  poset.dec_parent_.assign(n + 1, 0);
  poset.inc_parent_.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    for (int u = v - 1; u >= 1; --u) {
      if (closure.prec(v, u)) {
        poset.dec_parent_[v] = u;
        break;
      }
    }
    for (int w = v + 1; w <= n; ++w) {
      if (closure.prec(v, w)) {
        poset.inc_parent_[v] = w;
        break;
      }
    }
  }

  // The axioms make each vertex's predecessors a chain, so the nearest one
  // covers the rest; verify rather than assume.
  for (int v = 1; v <= n; ++v) {
    int dp = poset.dec_parent_[v];
    for (int u = 1; u <= n; ++u) {
      if (u == v) continue;
      if (u < v && closure.prec(v, u) && u != dp && !closure.prec(dp, u)) {
        throw DomainError(ErrorCode::DuplicateParent,
                          "vertex " + std::to_string(v) + " has incomparable "
                          "decreasing parents");
      }
      int ip = poset.inc_parent_[v];
      if (u > v && closure.prec(v, u) && u != ip && !closure.prec(ip, u)) {
        throw DomainError(ErrorCode::DuplicateParent,
                          "vertex " + std::to_string(v) + " has incomparable "
                          "increasing parents");
      }
    }
  }

  // Descendant contiguity, a consequence of the axioms asserted directly:
  // everything preceding v from above sits in one block right above v, and
  // symmetrically below.
  for (int v = 1; v <= n; ++v) {
    int above = 0;
    int below = 0;
    for (int u = v + 1; u <= n; ++u) above += closure.prec(u, v) ? 1 : 0;
    for (int u = 1; u < v; ++u) below += closure.prec(u, v) ? 1 : 0;
    for (int u = v + 1; u <= v + above; ++u) {
      if (!closure.prec(u, v)) {
        throw DomainError(ErrorCode::Internal, "final forest block not contiguous");
      }
    }
    for (int u = v - below; u < v; ++u) {
      if (!closure.prec(u, v)) {
        throw DomainError(ErrorCode::Internal, "initial forest block not contiguous");
      }
    }
  }

  return poset;
}

std::vector<std::pair<int, int>> IntervalPoset::cover_relations() const {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= n_; ++v) {
    if (dec_parent_[v] != 0) pairs.emplace_back(v, dec_parent_[v]);
  }
  for (int v = 1; v <= n_; ++v) {
    if (inc_parent_[v] != 0) pairs.emplace_back(v, inc_parent_[v]);
  }
  return pairs;
}

Closure IntervalPoset::closure() const {
  auto pairs = cover_relations();
  return Closure(n_, pairs);
}

IntervalPoset from_tree_pair(const BinaryTree& lower, const BinaryTree& upper) {
  if (lower.size() != upper.size()) {
    throw DomainError(ErrorCode::SizeMismatch, "trees of different sizes");
  }
  int n = lower.size();
  std::vector<std::pair<int, int>> relations;
  auto dec = preorder_parents(dec_forest_of_tree(lower));
  auto inc = postorder_parents(inc_forest_of_tree(upper));
  for (int v = 1; v <= n; ++v) {
    if (dec[v] != 0) relations.emplace_back(v, dec[v]);
    if (inc[v] != 0) relations.emplace_back(v, inc[v]);
  }
  try {
    return IntervalPoset::validate(n, relations);
  } catch (const DomainError& e) {
    throw DomainError(ErrorCode::NotAnInterval,
                      std::string("tree pair is not a Tamari interval: ") + e.what());
  }
}

BinaryTree lower_tree(const IntervalPoset& poset) {
  return tree_from_dec_forest(dec_forest_of_poset(poset));
}

BinaryTree upper_tree(const IntervalPoset& poset) {
  return tree_from_inc_forest(inc_forest_of_poset(poset));
}

PlanarForest dec_forest_of_poset(const IntervalPoset& poset) {
  std::vector<int> parents(poset.size() + 1, 0);
  for (int v = 1; v <= poset.size(); ++v) parents[v] = poset.dec_parent(v);
  return forest_from_preorder_parents(parents);
}

PlanarForest inc_forest_of_poset(const IntervalPoset& poset) {
  std::vector<int> parents(poset.size() + 1, 0);
  for (int v = 1; v <= poset.size(); ++v) parents[v] = poset.inc_parent(v);
  return forest_from_postorder_parents(parents);
}

int stat_trees(const IntervalPoset& poset) {
  int roots = 0;
  for (int v = 1; v <= poset.size(); ++v) {
    if (poset.dec_parent(v) == 0) ++roots;
  }
  return roots;
}

int stat_ir(const IntervalPoset& poset) {
  // (v-1) -> v holds exactly when v-1's increasing cover parent is v.
  for (int v = 2; v <= poset.size(); ++v) {
    if (poset.inc_parent(v - 1) == v) return v - 1;
  }
  return poset.size();
}

IntervalStats interval_stats(const IntervalPoset& poset) {
  return IntervalStats{poset.size(), stat_trees(poset), stat_ir(poset)};
}

bool tamari_leq(const BinaryTree& lower, const BinaryTree& upper) {
  if (lower.size() != upper.size()) {
    throw DomainError(ErrorCode::SizeMismatch, "trees of different sizes");
  }
  try {
    from_tree_pair(lower, upper);
    return true;
  } catch (const DomainError& e) {
    if (e.code() == ErrorCode::NotAnInterval) return false;
    throw;
  }
}

IntervalPoset restrict_range(const IntervalPoset& poset, int lo, int hi) {
  if (lo < 1 || hi > poset.size() || lo > hi + 1) {
    throw DomainError(ErrorCode::OutOfRange, "bad restriction range");
  }
  if (lo > hi) return IntervalPoset{};
  Closure closure = poset.closure();
  std::vector<std::pair<int, int>> relations;
  for (int a = lo; a <= hi; ++a) {
    for (int b = lo; b <= hi; ++b) {
      if (a != b && closure.prec(a, b)) relations.emplace_back(a - lo + 1, b - lo + 1);
    }
  }
  return IntervalPoset::validate(hi - lo + 1, relations);
}

std::string render_poset(const IntervalPoset& poset) {
  std::string out = std::to_string(poset.size()) + ":";
  bool first = true;
  for (const auto& [child, parent] : poset.cover_relations()) {
    out += first ? " " : ", ";
    out += std::to_string(child) + "->" + std::to_string(parent);
    first = false;
  }
  return out;
}

namespace {

int parse_label(const std::string& text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw ParseError(pos, "expected a number");
  try {
    return std::stoi(text.substr(start, pos - start));
  } catch (const std::out_of_range&) {
    throw ParseError(start, "number out of range");
  }
}

void expect_token(const std::string& text, std::size_t& pos, const std::string& token) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (text.compare(pos, token.size(), token) != 0) {
    throw ParseError(pos, "expected '" + token + "'");
  }
  pos += token.size();
}

}  // namespace

IntervalPoset parse_poset(const std::string& text) {
  std::size_t pos = 0;
  int n = parse_label(text, pos);
  expect_token(text, pos, ":");
  std::vector<std::pair<int, int>> relations;
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (!relations.empty()) {
      expect_token(text, pos, ",");
    }
    int a = parse_label(text, pos);
    expect_token(text, pos, "->");
    int b = parse_label(text, pos);
    relations.emplace_back(a, b);
  }
  return IntervalPoset::validate(n, relations);
}

}  // namespace tamari
