#pragma once

#include <memory>
#include <string>
#include <vector>

namespace tamari {

namespace detail {
struct TreeNode;
}

// Unlabeled rooted binary tree with structural sharing. The empty tree is a
// valid value. Labels 1..n are implicit through the in-order traversal (the
// unique binary-search-tree labeling), which every operation taking a vertex
// position relies on.
class BinaryTree {
 public:
  BinaryTree() = default;  // empty tree

  static BinaryTree branch(BinaryTree left, BinaryTree right);

  bool is_empty() const { return node_ == nullptr; }
  int size() const;
  const BinaryTree& left() const;
  const BinaryTree& right() const;

  bool operator==(const BinaryTree& other) const;
  bool operator!=(const BinaryTree& other) const { return !(*this == other); }

 private:
  explicit BinaryTree(std::shared_ptr<const detail::TreeNode> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const detail::TreeNode> node_;
};

namespace detail {
struct TreeNode {
  BinaryTree left;
  BinaryTree right;
  int size;
};
}  // namespace detail

// Balanced up/down step sequence staying weakly above zero.
class DyckPath {
 public:
  DyckPath() = default;  // empty path (size 0)

  // Validates balance and nonnegative prefixes; throws MalformedPath.
  static DyckPath from_steps(std::vector<bool> ups);

  const std::vector<bool>& steps() const { return ups_; }
  int size() const { return static_cast<int>(ups_.size()) / 2; }

  bool operator==(const DyckPath& other) const = default;

 private:
  std::vector<bool> ups_;  // true = up step
};

// Ordered tree of an ordered forest; labels are implicit via a traversal
// chosen by the consumer (preorder for final forests, postorder for initial
// forests).
struct OrderedTree {
  std::vector<OrderedTree> children;

  int size() const;
  bool operator==(const OrderedTree& other) const = default;
};

using PlanarForest = std::vector<OrderedTree>;

int forest_size(const PlanarForest& forest);

// Parent map of the forest under preorder labels 1..n (0 = root).
std::vector<int> preorder_parents(const PlanarForest& forest);
// Parent map under postorder labels 1..n (0 = root).
std::vector<int> postorder_parents(const PlanarForest& forest);

// Rebuilds a forest from a preorder parent map: children of v are exactly the
// u with parents[u] = v, in ascending order, and descendants of v must fill
// the contiguous label range right above v.
PlanarForest forest_from_preorder_parents(const std::vector<int>& parents);
// Same for postorder labels: descendants of v fill the range right below v.
PlanarForest forest_from_postorder_parents(const std::vector<int>& parents);

// Recursive split at the last up step leaving the x-axis: D = D1 u D2 d
// maps to the tree with subtrees image(D1), image(D2).
BinaryTree tree_from_dyck(const DyckPath& path);
DyckPath dyck_from_tree(const BinaryTree& tree);

// Right rotation y(x(A,B),C) -> x(A,y(B,C)) at the node with the given
// in-order position. Throws NoLeftChild when the pivot has no left child.
BinaryTree right_rotate(const BinaryTree& tree, int pos);

// All tree shapes of size n, ordered by left-subtree size (smaller first),
// then recursively. Catalan(n) results.
std::vector<BinaryTree> enumerate_trees(int n);

// Returns to height zero, the start point excluded.
int contacts(const DyckPath& path);
// Length of the maximal leading run of up steps.
int initial_rise(const DyckPath& path);

// Final forest dec(T): keeps b -> a exactly when b lies in the right subtree
// of a; the result carries labels in preorder.
PlanarForest dec_forest_of_tree(const BinaryTree& tree);
// Initial forest inc(T): a -> c when a lies in the left subtree of c; the
// result carries labels in postorder.
PlanarForest inc_forest_of_tree(const BinaryTree& tree);

BinaryTree tree_from_dec_forest(const PlanarForest& forest);
BinaryTree tree_from_inc_forest(const PlanarForest& forest);

// Reachability under right rotations, computed by breadth-first closure over
// the full size class and memoized per size. Independent order oracle; meant
// for small sizes only.
bool tamari_leq_bruteforce(const BinaryTree& lower, const BinaryTree& upper);

// Text format `T := "." | "(" T T ")"`, whitespace ignored.
std::string render_tree(const BinaryTree& tree);
BinaryTree parse_tree(const std::string& text);

// Text format: nonempty string over {U, D}.
std::string render_dyck(const DyckPath& path);
DyckPath parse_dyck(const std::string& text);

// Text format `F := T+ ; T := "(" T* ")"`, whitespace ignored.
std::string render_forest(const PlanarForest& forest);
PlanarForest parse_forest(const std::string& text);

}  // namespace tamari
