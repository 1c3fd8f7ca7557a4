#include <doctest.h>

#include <set>

#include "tamari/catalan.hpp"
#include "tamari/errors.hpp"

using namespace tamari;

namespace {

BinaryTree leaf() { return BinaryTree{}; }
BinaryTree node(BinaryTree l = {}, BinaryTree r = {}) {
  return BinaryTree::branch(std::move(l), std::move(r));
}

BinaryTree left_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = node(t, leaf());
  return t;
}

BinaryTree right_comb(int n) {
  BinaryTree t;
  for (int i = 0; i < n; ++i) t = node(leaf(), t);
  return t;
}

// The size-10 tree of the worked forest example:
// 5(1(.,3(2,4)), 7(6, 9(8,10))) under in-order labels.
BinaryTree example_tree_10() {
  BinaryTree three = node(node(), node());
  BinaryTree one = node(leaf(), three);
  BinaryTree nine = node(node(), node());
  BinaryTree seven = node(node(), nine);
  return node(one, seven);
}

// Per in-order label, whether the node has an empty left subtree.
void empty_left_flags(const BinaryTree& t, std::vector<bool>& out) {
  if (t.is_empty()) return;
  empty_left_flags(t.left(), out);
  out.push_back(t.left().is_empty());
  empty_left_flags(t.right(), out);
}

}  // namespace

TEST_CASE("dyck to tree examples") {
  CHECK(tree_from_dyck(parse_dyck("UD")) == node());
  CHECK(tree_from_dyck(parse_dyck("UUDD")) == right_comb(2));
  CHECK(tree_from_dyck(parse_dyck("UDUD")) == left_comb(2));
}

TEST_CASE("tree to dyck examples") {
  CHECK(render_dyck(dyck_from_tree(node())) == "UD");
  CHECK(render_dyck(dyck_from_tree(right_comb(2))) == "UUDD");
  CHECK(render_dyck(dyck_from_tree(left_comb(2))) == "UDUD");
}

TEST_CASE("dyck validation") {
  CHECK_THROWS_AS(DyckPath::from_steps({true, false, false, true}), DomainError);
  CHECK_THROWS_AS(DyckPath::from_steps({true, true, false}), DomainError);
  CHECK_THROWS_AS(parse_dyck("UDX"), ParseError);
}

TEST_CASE("tree and dyck are mutually inverse up to size 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      DyckPath d = dyck_from_tree(t);
      CHECK(tree_from_dyck(d) == t);
      CHECK(d.size() == n);
    }
  }
}

TEST_CASE("right rotation examples") {
  CHECK(right_rotate(left_comb(2), 2) == right_comb(2));

  // y(x(A,B),C) with single-node A, B, C: labels A=1 x=2 B=3 y=4 C=5.
  BinaryTree x = node(node(), node());
  BinaryTree y = node(x, node());
  BinaryTree expected = node(node(), node(node(), node()));
  CHECK(right_rotate(y, 4) == expected);

  try {
    right_rotate(right_comb(2), 1);
    FAIL("expected NoLeftChild");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NoLeftChild);
  }
  CHECK_THROWS_AS(right_rotate(node(), 2), DomainError);
}

TEST_CASE("rotation preserves in-order positions of untouched nodes") {
  // Rotating deeper inside a bigger tree only rewrites the local pattern.
  BinaryTree t = example_tree_10();
  BinaryTree rotated = right_rotate(t, 3);  // node 3 has left child 2
  CHECK(rotated.size() == 10);
  CHECK(rotated != t);
}

TEST_CASE("enumerate_trees counts") {
  CHECK(enumerate_trees(0).size() == 1);
  CHECK(enumerate_trees(3).size() == 5);
  CHECK(enumerate_trees(5).size() == 42);
  std::set<std::string> keys;
  for (const auto& t : enumerate_trees(6)) keys.insert(render_tree(t));
  CHECK(keys.size() == 132);
}

TEST_CASE("enumerate_trees order is fixed: left-subtree size first") {
  std::vector<std::string> rendered;
  for (const auto& t : enumerate_trees(3)) rendered.push_back(render_tree(t));
  CHECK(rendered == std::vector<std::string>{
                        "(.(.(..)))", "(.((..).))", "((..)(..))",
                        "((.(..)).)", "(((..).).)"});
}

TEST_CASE("contacts and initial rise") {
  CHECK(contacts(parse_dyck("UUDUDDUD")) == 2);
  CHECK(contacts(parse_dyck("UDUDUD")) == 3);
  CHECK(contacts(parse_dyck("UUUDDD")) == 1);
  CHECK(initial_rise(parse_dyck("UUUDUDDD")) == 3);
  CHECK(initial_rise(parse_dyck("UD")) == 1);
  CHECK(initial_rise(parse_dyck("UDUD")) == 1);
}

TEST_CASE("final forest of the worked example") {
  auto parents = preorder_parents(dec_forest_of_tree(example_tree_10()));
  std::vector<int> expected = {0, 0, 1, 1, 3, 0, 5, 5, 7, 7, 9};
  CHECK(parents == expected);
}

TEST_CASE("final forest edge cases") {
  auto chain = dec_forest_of_tree(right_comb(2));
  CHECK(preorder_parents(chain) == std::vector<int>{0, 0, 1});
  auto singles = dec_forest_of_tree(left_comb(4));
  CHECK(preorder_parents(singles) == std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("initial forest of the worked example") {
  auto parents = postorder_parents(inc_forest_of_tree(example_tree_10()));
  std::vector<int> expected = {0, 5, 3, 5, 5, 0, 7, 0, 9, 0, 0};
  CHECK(parents == expected);
}

TEST_CASE("initial forest edge cases") {
  CHECK(postorder_parents(inc_forest_of_tree(left_comb(2))) ==
        std::vector<int>{0, 2, 0});
  CHECK(postorder_parents(inc_forest_of_tree(right_comb(4))) ==
        std::vector<int>{0, 0, 0, 0, 0});
}

TEST_CASE("forest to tree recursions") {
  CHECK(tree_from_dec_forest(dec_forest_of_tree(right_comb(2))) == right_comb(2));
  CHECK(tree_from_dec_forest(dec_forest_of_tree(example_tree_10())) ==
        example_tree_10());
  PlanarForest singletons(3, OrderedTree{});
  CHECK(tree_from_dec_forest(singletons) == left_comb(3));
  CHECK(tree_from_inc_forest(singletons) == right_comb(3));
  CHECK(tree_from_inc_forest(inc_forest_of_tree(example_tree_10())) ==
        example_tree_10());
  // Single increasing chain of length n maps to the left comb.
  OrderedTree chain;
  chain.children.push_back(OrderedTree{});
  CHECK(tree_from_inc_forest({chain}) == left_comb(2));
}

TEST_CASE("forest constructions are mutually inverse up to size 8") {
  for (int n = 0; n <= 8; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      CHECK(tree_from_dec_forest(dec_forest_of_tree(t)) == t);
      CHECK(tree_from_inc_forest(inc_forest_of_tree(t)) == t);
    }
  }
}

TEST_CASE("contacts equal final-forest components up to size 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      auto parents = preorder_parents(dec_forest_of_tree(t));
      int roots = 0;
      for (int v = 1; v <= n; ++v) roots += parents[v] == 0 ? 1 : 0;
      CHECK(contacts(dyck_from_tree(t)) == roots);
    }
  }
}

TEST_CASE("initial rise counts leading nodes without a left subtree") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      std::vector<bool> flags;
      empty_left_flags(t, flags);
      int leading = 0;
      while (leading < n && flags[leading]) ++leading;
      CHECK(initial_rise(dyck_from_tree(t)) == leading);
    }
  }
}

TEST_CASE("rotation oracle basics") {
  CHECK(tamari_leq_bruteforce(left_comb(3), left_comb(3)));
  CHECK(tamari_leq_bruteforce(left_comb(4), right_comb(4)));
  CHECK_FALSE(tamari_leq_bruteforce(right_comb(3), left_comb(3)));
  CHECK_THROWS_AS(tamari_leq_bruteforce(left_comb(2), left_comb(3)), DomainError);

  int pairs = 0;
  for (const auto& a : enumerate_trees(3)) {
    for (const auto& b : enumerate_trees(3)) {
      if (tamari_leq_bruteforce(a, b)) ++pairs;
    }
  }
  CHECK(pairs == 13);
}

TEST_CASE("a right rotation moves strictly up") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      for (int pos = 1; pos <= n; ++pos) {
        BinaryTree rotated;
        try {
          rotated = right_rotate(t, pos);
        } catch (const DomainError&) {
          continue;
        }
        CHECK(rotated != t);
        CHECK(tamari_leq_bruteforce(t, rotated));
        CHECK_FALSE(tamari_leq_bruteforce(rotated, t));
      }
    }
  }
}

TEST_CASE("rotation closure is a partial order up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    auto trees = enumerate_trees(n);
    for (const auto& a : trees) {
      for (const auto& b : trees) {
        if (tamari_leq_bruteforce(a, b) && tamari_leq_bruteforce(b, a)) {
          CHECK(a == b);
        }
        for (const auto& c : trees) {
          if (tamari_leq_bruteforce(a, b) && tamari_leq_bruteforce(b, c)) {
            CHECK(tamari_leq_bruteforce(a, c));
          }
        }
      }
    }
  }
}
