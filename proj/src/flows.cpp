#include "tamari/flows.hpp"

#include <cctype>
#include <utility>

#include "tamari/errors.hpp"

namespace tamari {

namespace {

// Subtree sizes (node included) indexed by preorder label.
std::vector<int> subtree_sizes(const PlanarForest& forest) {
  int n = forest_size(forest);
  std::vector<int> sizes(n + 1, 0);
  int next = 1;
  auto walk = [&](auto&& self, const OrderedTree& tree) -> int {
    int label = next++;
    int size = 1;
    for (const auto& child : tree.children) size += self(self, child);
    sizes[label] = size;
    return size;
  };
  for (const auto& tree : forest) walk(walk, tree);
  return sizes;
}

}  // namespace

Flow validate_flow(const PlanarForest& forest, std::vector<int> inputs) {
  int n = forest_size(forest);
  if (static_cast<int>(inputs.size()) == n) {
    inputs.insert(inputs.begin(), 0);  // shift to 1-based
  }
  if (static_cast<int>(inputs.size()) != n + 1) {
    throw DomainError(ErrorCode::SizeMismatch, "one input per node required");
  }
  for (int v = 1; v <= n; ++v) {
    if (inputs[v] < -1) {
      throw DomainError(ErrorCode::InputBelowMinusOne,
                        "input below -1 at node " + std::to_string(v));
    }
  }
  Flow flow{forest, std::move(inputs)};
  auto rates = outgoing_rates(flow);
  for (int v = 1; v <= n; ++v) {
    if (rates[v] < 0) {
      throw DomainError(ErrorCode::NegativeRate,
                        "negative outgoing rate at node " + std::to_string(v));
    }
  }
  return flow;
}

std::vector<int> outgoing_rates(const Flow& flow) {
  int n = forest_size(flow.forest);
  std::vector<int> rates(n + 1, 0);
  int next = 1;
  auto walk = [&](auto&& self, const OrderedTree& tree) -> int {
    int label = next++;
    int rate = flow.inputs[label];
    for (const auto& child : tree.children) rate += self(self, child);
    rates[label] = rate;
    return rate;
  };
  for (const auto& tree : flow.forest) walk(walk, tree);
  return rates;
}

int exit_rate(const Flow& flow) {
  auto rates = outgoing_rates(flow);
  int total = 0;
  int label = 1;
  for (const auto& tree : flow.forest) {
    total += rates[label];
    label += tree.size();
  }
  return total;
}

bool is_closed(const Flow& flow) { return exit_rate(flow) == 0; }

namespace {

std::vector<Flow> enumerate_flows(const PlanarForest& forest, int target, int bound) {
  int n = forest_size(forest);
  std::vector<Flow> out;
  if (n == 0) {
    if (target == 0) out.push_back(Flow{forest, {0}});
    return out;
  }
  std::vector<int> inputs(n + 1, -1);
  inputs[0] = 0;  // unused slot, kept zero so flows compare equal
  while (true) {
    Flow flow{forest, inputs};
    auto rates = outgoing_rates(flow);
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v) ok = rates[v] >= 0;
    if (ok && exit_rate(flow) == target) out.push_back(flow);
    // odometer in lexicographic order
    int v = n;
    while (v >= 1 && inputs[v] == bound) inputs[v--] = -1;
    if (v == 0) break;
    ++inputs[v];
  }
  return out;
}

}  // namespace

std::vector<Flow> enumerate_closed_flows(const PlanarForest& forest) {
  return enumerate_flows(forest, 0, forest_size(forest));
}

std::vector<Flow> enumerate_flows_with_exit(const PlanarForest& forest, int k) {
  // Bound lemma: the exit rate is the sum of all inputs, and every other
  // input subtracts at most 1, so an input above k + (n-1) forces an exit
  // rate above k. k + n is therefore wide enough.
  return enumerate_flows(forest, k, k + forest_size(forest));
}

std::vector<Flow> enumerate_flows_with_exit(const PlanarForest& forest, int k,
                                            int input_bound) {
  return enumerate_flows(forest, k, input_bound);
}

BinaryTree forest_to_upper_tree(const PlanarForest& forest) {
  return tree_from_dec_forest(forest);
}

IntervalPoset flow_to_interval_poset(const Flow& flow) {
  if (!is_closed(flow)) {
    throw DomainError(ErrorCode::NotClosed, "flow has nonzero exit rate");
  }
  int n = forest_size(flow.forest);
  auto sizes = subtree_sizes(flow.forest);

  std::vector<std::pair<int, int>> relations;
  for (int v = 1; v <= n; ++v) {
    int after = v + sizes[v];  // first vertex that is not a descendant
    if (after <= n) relations.emplace_back(v, after);
  }

  // Leaks poured in decreasing label order; each pours into the first
  // strictly positive input among its descendants.
  std::vector<int> working(flow.inputs);
  for (int v = n; v >= 1; --v) {
    if (working[v] != -1) continue;
    int source = 0;
    for (int j = v + 1; j < v + sizes[v]; ++j) {
      if (working[j] > 0) {
        source = j;
        break;
      }
    }
    if (source == 0) {
      throw DomainError(ErrorCode::NoSource, "leak without a source in a closed flow");
    }
    for (int j = v + 1; j <= source; ++j) relations.emplace_back(j, v);
    working[v] = 0;
    --working[source];
  }

  return IntervalPoset::validate(n, relations);
}

Flow interval_poset_to_flow(const IntervalPoset& poset) {
  int n = poset.size();
  Closure closure = poset.closure();

  // Forest: the parent of j is the largest i < j not preceding j.
  std::vector<int> parents(n + 1, 0);
  for (int j = 1; j <= n; ++j) {
    for (int i = j - 1; i >= 1; --i) {
      if (!closure.prec(i, j)) {
        parents[j] = i;
        break;
      }
    }
  }
  PlanarForest forest = forest_from_preorder_parents(parents);

  std::vector<int> inputs(n + 1, 0);
  for (int a = 1; a <= n; ++a) {
    int source = 0;
    for (int b = n; b > a; --b) {
      if (closure.prec(b, a)) {
        source = b;
        break;
      }
    }
    if (source != 0) {
      inputs[a] = -1;
      ++inputs[source];
    }
  }
  return validate_flow(forest, std::move(inputs));
}

FlowStats flow_stats(const Flow& flow) {
  int n = forest_size(flow.forest);
  auto rates = outgoing_rates(flow);
  FlowStats stats;
  std::vector<bool> is_root(n + 1, false);
  int label = 1;
  for (const auto& tree : flow.forest) {
    is_root[label] = true;
    stats.exit_rate += rates[label];
    label += tree.size();
  }
  for (int v = 1; v <= n; ++v) {
    if (flow.inputs[v] == -1) ++stats.leaks;
    if (!is_root[v]) stats.rate_sum += rates[v];
  }
  return stats;
}

PosetFlowStats poset_flow_stats(const IntervalPoset& poset) {
  int n = poset.size();
  Closure closure = poset.closure();
  PosetFlowStats stats;
  for (int a = 1; a < n; ++a) {
    if (closure.prec(a + 1, a)) ++stats.leaks;
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!closure.prec(b, a)) continue;
      bool maximal = true;
      for (int c = b + 1; c <= n && maximal; ++c) {
        if (closure.prec(c, a) && closure.prec(b, c)) maximal = false;
      }
      if (maximal) ++stats.rate_sum;
    }
  }
  return stats;
}

UniPoly closed_flow_series(const PlanarForest& forest) {
  UniPoly series;
  for (const auto& flow : enumerate_closed_flows(forest)) {
    series = series + UniPoly::term(stat_trees(flow_to_interval_poset(flow)), BigInt(1));
  }
  return series;
}

namespace {

struct FlowCursor {
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
  int read_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (text[start] == '-' && pos == start + 1)) {
      throw ParseError(start, "expected an integer");
    }
    try {
      return std::stoi(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
      throw ParseError(start, "integer out of range");
    }
  }
};

OrderedTree parse_flow_tree(FlowCursor& cur, std::vector<int>& inputs) {
  if (cur.peek() != '(') throw ParseError(cur.pos, "expected '('");
  ++cur.pos;
  inputs.push_back(cur.read_int());
  OrderedTree tree;
  while (cur.peek() != ')') tree.children.push_back(parse_flow_tree(cur, inputs));
  ++cur.pos;
  return tree;
}

void render_flow_tree(const OrderedTree& tree, const std::vector<int>& inputs,
                      int& label, std::string& out) {
  out += '(';
  out += std::to_string(inputs[label++]);
  for (const auto& child : tree.children) {
    out += ' ';
    render_flow_tree(child, inputs, label, out);
  }
  out += ')';
}

}  // namespace

std::string render_flow(const Flow& flow) {
  std::string out;
  int label = 1;
  for (const auto& tree : flow.forest) render_flow_tree(tree, flow.inputs, label, out);
  return out;
}

Flow parse_flow(const std::string& text) {
  FlowCursor cur{text};
  PlanarForest forest;
  std::vector<int> inputs;
  forest.push_back(parse_flow_tree(cur, inputs));
  while (!cur.at_end()) forest.push_back(parse_flow_tree(cur, inputs));
  return validate_flow(forest, std::move(inputs));
}

}  // namespace tamari
