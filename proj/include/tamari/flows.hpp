#pragma once

#include <string>
#include <vector>

#include "tamari/catalan.hpp"
#include "tamari/interval_poset.hpp"
#include "tamari/poly.hpp"

namespace tamari {

// Flow on an ordered forest: one integer input >= -1 per node, in preorder,
// with every outgoing rate nonnegative. Construct through validate_flow.
struct Flow {
  PlanarForest forest;
  std::vector<int> inputs;  // inputs[0] unused; 1..n in preorder

  bool operator==(const Flow&) const = default;
};

struct FlowStats {
  int exit_rate = 0;
  int leaks = 0;     // number of -1 inputs
  int rate_sum = 0;  // outgoing rates summed over non-root nodes
  bool operator==(const FlowStats&) const = default;
};

struct PosetFlowStats {
  int leaks = 0;
  int rate_sum = 0;
  bool operator==(const PosetFlowStats&) const = default;
};

// Checks one input per node, inputs >= -1, and all outgoing rates >= 0.
// Throws InputBelowMinusOne / NegativeRate / SizeMismatch.
Flow validate_flow(const PlanarForest& forest, std::vector<int> inputs);

// Outgoing rate per node (input plus the rates of the children), preorder.
std::vector<int> outgoing_rates(const Flow& flow);

// Sum of the root rates; the flow is closed when this is 0.
int exit_rate(const Flow& flow);
bool is_closed(const Flow& flow);

// All closed flows of the forest, ordered lexicographically by the preorder
// input vector. An input never exceeds the node count.
std::vector<Flow> enumerate_closed_flows(const PlanarForest& forest);

// All flows with the given exit rate; inputs are bounded by k plus the node
// count. `input_bound` widens the sweep for bound-sufficiency checks.
std::vector<Flow> enumerate_flows_with_exit(const PlanarForest& forest, int k);
std::vector<Flow> enumerate_flows_with_exit(const PlanarForest& forest, int k,
                                            int input_bound);

// The binary tree whose final forest is the given forest.
BinaryTree forest_to_upper_tree(const PlanarForest& forest);

// Closed flow -> interval-poset: the forest provides the increasing
// relations; leaks, processed from the largest label down, pour into the
// first positive input among their descendants and leave decreasing
// relations behind. Throws NotClosed.
IntervalPoset flow_to_interval_poset(const Flow& flow);

// Exact inverse: forest from the increasing relations, then each vertex
// preceded from above becomes a leak feeding its largest such predecessor.
Flow interval_poset_to_flow(const IntervalPoset& poset);

FlowStats flow_stats(const Flow& flow);

// The same two statistics read off the poset alone: leaks count vertices a
// with a+1 -> a; rate_sum sums, over all a, the predecessors of a from above
// that are maximal for the increasing relations.
PosetFlowStats poset_flow_stats(const IntervalPoset& poset);

// Closed-flow series in u = 1/(1-t): one u^trees(I_f) term per closed flow.
UniPoly closed_flow_series(const PlanarForest& forest);

// Text format `FT := "(" int FT* ")"`, forest = FT+, preorder inputs.
std::string render_flow(const Flow& flow);
Flow parse_flow(const std::string& text);

}  // namespace tamari
