#include "tamari/catalan.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <unordered_map>

#include "tamari/errors.hpp"

namespace tamari {

BinaryTree BinaryTree::branch(BinaryTree left, BinaryTree right) {
  int size = left.size() + right.size() + 1;
  return BinaryTree(std::make_shared<const detail::TreeNode>(
      detail::TreeNode{std::move(left), std::move(right), size}));
}

int BinaryTree::size() const { return node_ ? node_->size : 0; }

const BinaryTree& BinaryTree::left() const {
  if (!node_) throw DomainError(ErrorCode::OutOfRange, "left() of empty tree");
  return node_->left;
}

const BinaryTree& BinaryTree::right() const {
  if (!node_) throw DomainError(ErrorCode::OutOfRange, "right() of empty tree");
  return node_->right;
}

bool BinaryTree::operator==(const BinaryTree& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (node_->size != other.node_->size) return false;
  return node_->left == other.node_->left && node_->right == other.node_->right;
}

DyckPath DyckPath::from_steps(std::vector<bool> ups) {
  int height = 0;
  for (bool up : ups) {
    height += up ? 1 : -1;
    if (height < 0) {
      throw DomainError(ErrorCode::MalformedPath, "path drops below the x-axis");
    }
  }
  if (height != 0) {
    throw DomainError(ErrorCode::MalformedPath, "path does not return to the x-axis");
  }
  DyckPath p;
  p.ups_ = std::move(ups);
  return p;
}

int OrderedTree::size() const {
  int total = 1;
  for (const auto& child : children) total += child.size();
  return total;
}

int forest_size(const PlanarForest& forest) {
  int total = 0;
  for (const auto& tree : forest) total += tree.size();
  return total;
}

namespace {

void preorder_walk(const OrderedTree& tree, int parent, int& next,
                   std::vector<int>& parents) {
  int label = next++;
  parents[label] = parent;
  for (const auto& child : tree.children) preorder_walk(child, label, next, parents);
}

void postorder_walk(const OrderedTree& tree, int& next, std::vector<int>& parents,
                    std::vector<int>& child_labels) {
  std::vector<int> labels;
  for (const auto& child : tree.children) {
    postorder_walk(child, next, parents, child_labels);
    labels.push_back(child_labels.back());
    child_labels.pop_back();
  }
  int label = next++;
  for (int c : labels) parents[c] = label;
  child_labels.push_back(label);
}

}  // namespace

std::vector<int> preorder_parents(const PlanarForest& forest) {
  std::vector<int> parents(forest_size(forest) + 1, 0);
  int next = 1;
  for (const auto& tree : forest) preorder_walk(tree, 0, next, parents);
  return parents;
}

std::vector<int> postorder_parents(const PlanarForest& forest) {
  std::vector<int> parents(forest_size(forest) + 1, 0);
  std::vector<int> child_labels;
  int next = 1;
  for (const auto& tree : forest) {
    postorder_walk(tree, next, parents, child_labels);
    child_labels.clear();
  }
  return parents;
}

namespace {

std::vector<std::vector<int>> children_lists(const std::vector<int>& parents) {
  int n = static_cast<int>(parents.size()) - 1;
  std::vector<std::vector<int>> children(n + 1);
  for (int v = 1; v <= n; ++v) {
    if (parents[v] < 0 || parents[v] > n) {
      throw DomainError(ErrorCode::OutOfRange, "parent label out of range");
    }
    children[parents[v]].push_back(v);  // ascending since v increases
  }
  return children;
}

// Builds the subtree of v and checks that its descendants occupy a label
// range contiguous in the traversal direction (+1 preorder, -1 postorder).
OrderedTree build_subtree(int v, const std::vector<std::vector<int>>& children,
                          int direction, int& expected) {
  OrderedTree tree;
  if (direction > 0) {
    if (v != expected) {
      throw DomainError(ErrorCode::OutOfRange, "labels are not a preorder");
    }
    ++expected;
    for (int c : children[v]) {
      tree.children.push_back(build_subtree(c, children, direction, expected));
    }
  } else {
    for (int c : children[v]) {
      tree.children.push_back(build_subtree(c, children, direction, expected));
    }
    if (v != expected) {
      throw DomainError(ErrorCode::OutOfRange, "labels are not a postorder");
    }
    ++expected;
  }
  return tree;
}

}  // namespace

PlanarForest forest_from_preorder_parents(const std::vector<int>& parents) {
  auto children = children_lists(parents);
  PlanarForest forest;
  int expected = 1;
  for (int r : children[0]) {
    forest.push_back(build_subtree(r, children, +1, expected));
  }
  return forest;
}

PlanarForest forest_from_postorder_parents(const std::vector<int>& parents) {
  auto children = children_lists(parents);
  PlanarForest forest;
  int expected = 1;
  for (int r : children[0]) {
    forest.push_back(build_subtree(r, children, -1, expected));
  }
  return forest;
}

namespace {

BinaryTree tree_from_dyck_range(const std::vector<bool>& steps, int lo, int hi) {
  if (lo == hi) return BinaryTree{};
  int height = 0;
  int split = -1;
  for (int i = lo; i < hi; ++i) {
    if (steps[i] && height == 0) split = i;
    height += steps[i] ? 1 : -1;
  }
  // split is the last up step leaving the x-axis; the matching down step is
  // the final step of the range.
  return BinaryTree::branch(tree_from_dyck_range(steps, lo, split),
                            tree_from_dyck_range(steps, split + 1, hi - 1));
}

void dyck_from_tree_walk(const BinaryTree& tree, std::vector<bool>& out) {
  if (tree.is_empty()) return;
  dyck_from_tree_walk(tree.left(), out);
  out.push_back(true);
  dyck_from_tree_walk(tree.right(), out);
  out.push_back(false);
}

}  // namespace

BinaryTree tree_from_dyck(const DyckPath& path) {
  return tree_from_dyck_range(path.steps(), 0, static_cast<int>(path.steps().size()));
}

DyckPath dyck_from_tree(const BinaryTree& tree) {
  std::vector<bool> steps;
  steps.reserve(2 * static_cast<std::size_t>(tree.size()));
  dyck_from_tree_walk(tree, steps);
  return DyckPath::from_steps(std::move(steps));
}

BinaryTree right_rotate(const BinaryTree& tree, int pos) {
  if (pos < 1 || pos > tree.size()) {
    throw DomainError(ErrorCode::OutOfRange, "rotation position out of range");
  }
  int left_size = tree.left().size();
  if (pos == left_size + 1) {
    const BinaryTree& pivot_left = tree.left();
    if (pivot_left.is_empty()) {
      throw DomainError(ErrorCode::NoLeftChild, "rotation pivot has no left child");
    }
    return BinaryTree::branch(
        pivot_left.left(),
        BinaryTree::branch(pivot_left.right(), tree.right()));
  }
  if (pos <= left_size) {
    return BinaryTree::branch(right_rotate(tree.left(), pos), tree.right());
  }
  return BinaryTree::branch(tree.left(),
                            right_rotate(tree.right(), pos - left_size - 1));
}

std::vector<BinaryTree> enumerate_trees(int n) {
  if (n < 0) throw DomainError(ErrorCode::OutOfRange, "negative size");
  std::vector<std::vector<BinaryTree>> by_size(n + 1);
  by_size[0] = {BinaryTree{}};
  for (int m = 1; m <= n; ++m) {
    for (int left_size = 0; left_size < m; ++left_size) {
      for (const auto& left : by_size[left_size]) {
        for (const auto& right : by_size[m - 1 - left_size]) {
          by_size[m].push_back(BinaryTree::branch(left, right));
        }
      }
    }
  }
  return by_size[n];
}

int contacts(const DyckPath& path) {
  int height = 0;
  int count = 0;
  for (bool up : path.steps()) {
    height += up ? 1 : -1;
    if (height == 0) ++count;
  }
  return count;
}

int initial_rise(const DyckPath& path) {
  int count = 0;
  for (bool up : path.steps()) {
    if (!up) break;
    ++count;
  }
  return count;
}

PlanarForest dec_forest_of_tree(const BinaryTree& tree) {
  if (tree.is_empty()) return {};
  PlanarForest forest = dec_forest_of_tree(tree.left());
  forest.push_back(OrderedTree{dec_forest_of_tree(tree.right())});
  return forest;
}

namespace {

BinaryTree mirror_tree(const BinaryTree& tree) {
  if (tree.is_empty()) return tree;
  return BinaryTree::branch(mirror_tree(tree.right()), mirror_tree(tree.left()));
}

OrderedTree mirror_ordered_tree(const OrderedTree& tree) {
  OrderedTree out;
  for (auto it = tree.children.rbegin(); it != tree.children.rend(); ++it) {
    out.children.push_back(mirror_ordered_tree(*it));
  }
  return out;
}

PlanarForest mirror_forest(const PlanarForest& forest) {
  PlanarForest out;
  for (auto it = forest.rbegin(); it != forest.rend(); ++it) {
    out.push_back(mirror_ordered_tree(*it));
  }
  return out;
}

}  // namespace

PlanarForest inc_forest_of_tree(const BinaryTree& tree) {
  // The increasing relations of T are the decreasing relations of the mirror
  // image under the label flip v -> n+1-v.
  return mirror_forest(dec_forest_of_tree(mirror_tree(tree)));
}

BinaryTree tree_from_dec_forest(const PlanarForest& forest) {
  if (forest.empty()) return BinaryTree{};
  PlanarForest prefix(forest.begin(), forest.end() - 1);
  return BinaryTree::branch(tree_from_dec_forest(prefix),
                            tree_from_dec_forest(forest.back().children));
}

BinaryTree tree_from_inc_forest(const PlanarForest& forest) {
  return mirror_tree(tree_from_dec_forest(mirror_forest(forest)));
}

namespace {

// Rotation closure of one size class: indexes every shape and the full
// reachability relation. Built once per size, then shared read-only.
struct RotationClosure {
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<bool>> leq;
};

const RotationClosure& rotation_closure(int n) {
  static std::mutex mutex;
  static std::map<int, RotationClosure> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  RotationClosure closure;
  auto trees = enumerate_trees(n);
  int count = static_cast<int>(trees.size());
  for (int i = 0; i < count; ++i) closure.index[render_tree(trees[i])] = i;

  std::vector<std::vector<int>> successors(count);
  for (int i = 0; i < count; ++i) {
    for (int pos = 1; pos <= n; ++pos) {
      try {
        successors[i].push_back(closure.index.at(render_tree(right_rotate(trees[i], pos))));
      } catch (const DomainError&) {
        // no left child at this position
      }
    }
  }

  closure.leq.assign(count, std::vector<bool>(count, false));
  for (int start = 0; start < count; ++start) {
    std::vector<int> stack{start};
    closure.leq[start][start] = true;
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      for (int next : successors[cur]) {
        if (!closure.leq[start][next]) {
          closure.leq[start][next] = true;
          stack.push_back(next);
        }
      }
    }
  }
  return cache.emplace(n, std::move(closure)).first->second;
}

}  // namespace

bool tamari_leq_bruteforce(const BinaryTree& lower, const BinaryTree& upper) {
  if (lower.size() != upper.size()) {
    throw DomainError(ErrorCode::SizeMismatch, "trees of different sizes");
  }
  const RotationClosure& closure = rotation_closure(lower.size());
  return closure.leq[closure.index.at(render_tree(lower))]
                    [closure.index.at(render_tree(upper))];
}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos == text.size();
  }
  char peek() {
    skip_ws();
    if (pos == text.size()) throw ParseError(pos, "unexpected end of input");
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) {
      throw ParseError(pos, std::string("expected '") + c + "'");
    }
    ++pos;
  }
};

BinaryTree parse_tree_node(Cursor& cur) {
  char c = cur.peek();
  if (c == '.') {
    ++cur.pos;
    return BinaryTree{};
  }
  cur.expect('(');
  BinaryTree left = parse_tree_node(cur);
  BinaryTree right = parse_tree_node(cur);
  cur.expect(')');
  return BinaryTree::branch(std::move(left), std::move(right));
}

OrderedTree parse_forest_tree(Cursor& cur) {
  cur.expect('(');
  OrderedTree tree;
  while (cur.peek() != ')') tree.children.push_back(parse_forest_tree(cur));
  ++cur.pos;
  return tree;
}

}  // namespace

std::string render_tree(const BinaryTree& tree) {
  if (tree.is_empty()) return ".";
  return "(" + render_tree(tree.left()) + render_tree(tree.right()) + ")";
}

BinaryTree parse_tree(const std::string& text) {
  Cursor cur{text};
  BinaryTree tree = parse_tree_node(cur);
  if (!cur.at_end()) throw ParseError(cur.pos, "trailing input after tree");
  return tree;
}

std::string render_dyck(const DyckPath& path) {
  std::string out;
  for (bool up : path.steps()) out += up ? 'U' : 'D';
  return out;
}

DyckPath parse_dyck(const std::string& text) {
  std::vector<bool> ups;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == 'U') {
      ups.push_back(true);
    } else if (c == 'D') {
      ups.push_back(false);
    } else {
      throw ParseError(i, "expected 'U' or 'D'");
    }
  }
  if (ups.empty()) throw ParseError(0, "empty path");
  return DyckPath::from_steps(std::move(ups));
}

std::string render_forest(const PlanarForest& forest) {
  std::string out;
  for (const auto& tree : forest) {
    out += '(';
    out += render_forest(tree.children);
    out += ')';
  }
  return out;
}

PlanarForest parse_forest(const std::string& text) {
  Cursor cur{text};
  PlanarForest forest;
  forest.push_back(parse_forest_tree(cur));
  while (!cur.at_end()) forest.push_back(parse_forest_tree(cur));
  return forest;
}

}  // namespace tamari
