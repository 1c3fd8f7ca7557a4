#include <doctest.h>

#include <map>
#include <set>

#include "tamari/errors.hpp"
#include "tamari/flows.hpp"
#include "tamari/verify.hpp"

using namespace tamari;

namespace {

const char* kFlowExample =
    "(-1 (-1 (1) (1 (3))) (-1 (-1 (2))))(-1 (0) (2))";  // exit rate 4

const char* kClosedExample =
    "(-1 (-1 (1) (1 (0))) (-1 (-1 (2))))(-1 (0) (1))";  // 11 nodes, closed

const char* kClosedExamplePoset =
    "11: 2->1, 3->2, 4->1, 7->6, 8->7, 10->9, 11->9, "
    "1->9, 2->6, 3->4, 4->6, 5->6, 6->9, 7->9, 8->9, 10->11";

std::vector<std::string> rendered(const std::vector<Flow>& flows) {
  std::vector<std::string> out;
  for (const auto& f : flows) out.push_back(render_flow(f));
  return out;
}

}  // namespace

TEST_CASE("flow validation") {
  Flow f = parse_flow(kFlowExample);
  CHECK(exit_rate(f) == 4);
  CHECK_FALSE(is_closed(f));

  try {
    parse_flow("(-1)");
    FAIL("expected NegativeRate");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NegativeRate);
  }
  try {
    parse_flow("(-2 (1))");
    FAIL("expected InputBelowMinusOne");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::InputBelowMinusOne);
  }

  Flow chain = parse_flow("(-1 (1))");
  CHECK(is_closed(chain));
  CHECK(outgoing_rates(chain) == std::vector<int>{0, 0, 1});
}

TEST_CASE("exit rate examples") {
  PlanarForest chain = parse_forest("(())");
  CHECK(exit_rate(validate_flow(chain, {0, 0})) == 0);
  CHECK(exit_rate(validate_flow(chain, {0, 1})) == 1);
}

TEST_CASE("closed flow enumeration") {
  CHECK(rendered(enumerate_closed_flows(parse_forest("()"))) ==
        std::vector<std::string>{"(0)"});

  CHECK(rendered(enumerate_closed_flows(parse_forest("(())"))) ==
        std::vector<std::string>{"(-1 (1))", "(0 (0))"});

  // The six closed flows of the forest with shape (())()(()()).
  CHECK(rendered(enumerate_closed_flows(parse_forest("(())()(()())"))) ==
        std::vector<std::string>{
            "(-1 (1))(0)(-1 (0) (1))",
            "(-1 (1))(0)(-1 (1) (0))",
            "(-1 (1))(0)(0 (0) (0))",
            "(0 (0))(0)(-1 (0) (1))",
            "(0 (0))(0)(-1 (1) (0))",
            "(0 (0))(0)(0 (0) (0))",
        });
}

TEST_CASE("flows with a given exit rate") {
  PlanarForest chain = parse_forest("(())");
  CHECK(enumerate_flows_with_exit(chain, 0).size() == 2);
  CHECK(rendered(enumerate_flows_with_exit(chain, 1)) ==
        std::vector<std::string>{"(-1 (2))", "(0 (1))", "(1 (0))"});
  CHECK(rendered(enumerate_flows_with_exit(parse_forest("()"), 5)) ==
        std::vector<std::string>{"(5)"});
}

TEST_CASE("the enumeration input bound is wide enough") {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& forest : enumerate_forests(n)) {
      for (int k = 0; k <= 3; ++k) {
        auto narrow = enumerate_flows_with_exit(forest, k);
        auto wide = enumerate_flows_with_exit(forest, k, k + n + 3);
        CHECK(narrow == wide);
      }
    }
  }
}

TEST_CASE("forest to tree correspondence") {
  CHECK(forest_to_upper_tree(parse_forest("(())")) == parse_tree("(.(..))"));
  CHECK(forest_to_upper_tree(parse_forest("()()")) == parse_tree("((..).)"));
  BinaryTree example = parse_tree("((.((..)(..)))((..)((..)(..))))");
  CHECK(forest_to_upper_tree(dec_forest_of_tree(example)) == example);
}

TEST_CASE("closed flow to interval-poset, worked example") {
  IntervalPoset poset = flow_to_interval_poset(parse_flow(kClosedExample));
  CHECK(render_poset(poset) == kClosedExamplePoset);
}

TEST_CASE("flow bijection edge cases") {
  CHECK(render_poset(flow_to_interval_poset(parse_flow("(-1 (1))"))) == "2: 2->1");

  // All-zero flows carry exactly the increasing relations of the forest.
  for (int n = 1; n <= 4; ++n) {
    for (const auto& forest : enumerate_forests(n)) {
      Flow zero = validate_flow(forest, std::vector<int>(n, 0));
      IntervalPoset poset = flow_to_interval_poset(zero);
      CHECK(stat_trees(poset) == n);
      for (int v = 1; v <= n; ++v) CHECK(poset.dec_parent(v) == 0);
    }
  }

  try {
    flow_to_interval_poset(parse_flow("(0 (1))"));
    FAIL("expected NotClosed");
  } catch (const DomainError& e) {
    CHECK(e.code() == ErrorCode::NotClosed);
  }
}

TEST_CASE("interval-poset to flow, worked example") {
  Flow flow = interval_poset_to_flow(parse_poset(kClosedExamplePoset));
  CHECK(render_flow(flow) == kClosedExample);

  CHECK(render_flow(interval_poset_to_flow(parse_poset("2: 2->1"))) == "(-1 (1))");
  CHECK(render_flow(interval_poset_to_flow(parse_poset("3: 1->3, 2->3"))) ==
        "(0 (0))(0)");
}

TEST_CASE("flow and poset round trips up to size 5") {
  PosetEnumerator enumerator;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& forest : enumerate_forests(n)) {
      for (const auto& flow : enumerate_closed_flows(forest)) {
        CHECK(interval_poset_to_flow(flow_to_interval_poset(flow)) == flow);
      }
    }
    for (const auto& poset : enumerator.posets_of_size(n)) {
      Flow flow = interval_poset_to_flow(poset);
      CHECK(is_closed(flow));
      CHECK(flow_to_interval_poset(flow) == poset);
    }
  }
}

TEST_CASE("the bijection respects the forest's tree") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& forest : enumerate_forests(n)) {
      BinaryTree top = forest_to_upper_tree(forest);
      for (const auto& flow : enumerate_closed_flows(forest)) {
        CHECK(upper_tree(flow_to_interval_poset(flow)) == top);
      }
    }
  }
}

TEST_CASE("flow statistics, worked example") {
  FlowStats stats = flow_stats(parse_flow(kClosedExample));
  CHECK(stats.exit_rate == 0);
  CHECK(stats.leaks == 5);
  CHECK(stats.rate_sum == 7);

  FlowStats zero = flow_stats(parse_flow("(0 (0))(0)"));
  CHECK(zero == FlowStats{0, 0, 0});

  FlowStats chain = flow_stats(parse_flow("(-1 (1))"));
  CHECK(chain.leaks == 1);
  CHECK(chain.rate_sum == 1);
}

TEST_CASE("poset-side statistics") {
  PosetFlowStats stats = poset_flow_stats(parse_poset(kClosedExamplePoset));
  CHECK(stats.leaks == 5);
  CHECK(stats.rate_sum == 7);
  CHECK(poset_flow_stats(parse_poset("4:")) == PosetFlowStats{0, 0});
  CHECK(poset_flow_stats(parse_poset("2: 2->1")) == PosetFlowStats{1, 1});
}

TEST_CASE("per-vertex maximal predecessor sets of the worked poset") {
  // rate_sum decomposes as {2,4} for 1, {3} for 2, {7,8} for 6, {8} for 7,
  // {11} for 9; leak vertices are 1, 2, 6, 7, 9.
  IntervalPoset poset = parse_poset(kClosedExamplePoset);
  Closure closure = poset.closure();
  std::map<int, std::set<int>> sets;
  for (int a = 1; a <= poset.size(); ++a) {
    for (int b = a + 1; b <= poset.size(); ++b) {
      if (!closure.prec(b, a)) continue;
      bool maximal = true;
      for (int c = b + 1; c <= poset.size() && maximal; ++c) {
        if (closure.prec(c, a) && closure.prec(b, c)) maximal = false;
      }
      if (maximal) sets[a].insert(b);
    }
  }
  std::map<int, std::set<int>> expected = {
      {1, {2, 4}}, {2, {3}}, {6, {7, 8}}, {7, {8}}, {9, {11}}};
  CHECK(sets == expected);

  std::set<int> leak_vertices;
  for (int a = 1; a < poset.size(); ++a) {
    if (closure.prec(a + 1, a)) leak_vertices.insert(a);
  }
  CHECK(leak_vertices == std::set<int>{1, 2, 6, 7, 9});
}

TEST_CASE("statistics transfer across the bijection up to size 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& forest : enumerate_forests(n)) {
      for (const auto& flow : enumerate_closed_flows(forest)) {
        FlowStats fs = flow_stats(flow);
        PosetFlowStats ps = poset_flow_stats(flow_to_interval_poset(flow));
        CHECK(fs.leaks == ps.leaks);
        CHECK(fs.rate_sum == ps.rate_sum);
      }
    }
  }
}

TEST_CASE("open flow counts follow the closed-flow series") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& forest : enumerate_forests(n)) {
      UniPoly series = closed_flow_series(forest);
      for (int k = 0; k <= 4; ++k) {
        BigInt expected;
        for (const auto& [r, coeff] : series.terms()) {
          expected += coeff * binomial(k + r - 1, r - 1);
        }
        CHECK(BigInt(static_cast<long long>(enumerate_flows_with_exit(forest, k).size())) ==
              expected);
      }
    }
  }
}
