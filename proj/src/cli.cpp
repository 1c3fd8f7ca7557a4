#include "tamari/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <sstream>
#include <type_traits>

#include "tamari/decomp.hpp"
#include "tamari/errors.hpp"
#include "tamari/verify.hpp"

namespace tamari::cli {

Object parse_object(const std::string& kind, const std::string& text) {
  if (kind == "tree") return parse_tree(text);
  if (kind == "dyck") return parse_dyck(text);
  if (kind == "poset") return parse_poset(text);
  if (kind == "forest") return parse_forest(text);
  if (kind == "flow") return parse_flow(text);
  throw ParseError(0, "unknown kind '" + kind + "'");
}

std::string render_object(const Object& object) {
  return std::visit(
      [](const auto& value) -> std::string {
        using T = std::decay_t<decltype(value)>;
        if constexpr (std::is_same_v<T, BinaryTree>) return render_tree(value);
        else if constexpr (std::is_same_v<T, DyckPath>) return render_dyck(value);
        else if constexpr (std::is_same_v<T, IntervalPoset>) return render_poset(value);
        else if constexpr (std::is_same_v<T, PlanarForest>) return render_forest(value);
        else return render_flow(value);
      },
      object);
}

std::string render_dot(const IntervalPoset& poset) {
  std::ostringstream out;
  out << "digraph interval_poset {\n  rankdir=BT;\n";
  for (int v = 1; v <= poset.size(); ++v) out << "  " << v << ";\n";
  for (int v = 1; v <= poset.size(); ++v) {
    if (poset.dec_parent(v) != 0) {
      out << "  " << v << " -> " << poset.dec_parent(v) << " [color=red];\n";
    }
  }
  for (int v = 1; v <= poset.size(); ++v) {
    if (poset.inc_parent(v) != 0) {
      out << "  " << v << " -> " << poset.inc_parent(v) << " [color=blue];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string render_dot(const Flow& flow) {
  int n = forest_size(flow.forest);
  auto rates = outgoing_rates(flow);
  std::vector<int> parents = preorder_parents(flow.forest);
  std::ostringstream out;
  out << "digraph flow {\n  rankdir=BT;\n";
  for (int v = 1; v <= n; ++v) {
    out << "  " << v << " [label=\"" << v << ':' << flow.inputs[v] << "\"];\n";
  }
  for (int v = 1; v <= n; ++v) {
    if (parents[v] != 0) {
      out << "  " << v << " -> " << parents[v] << " [label=\"" << rates[v] << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

std::string slurp(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.pop_back();
  }
  return text;
}

std::string input_or_stdin(const std::string& flag_value, std::istream& in) {
  return flag_value.empty() ? slurp(in) : flag_value;
}

// Two whitespace-separated trees.
std::pair<BinaryTree, BinaryTree> parse_tree_pair(const std::string& text) {
  // The tree grammar is self-delimiting: find the end of the first tree.
  std::size_t pos = 0;
  int depth = 0;
  std::size_t first_end = std::string::npos;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == ')' || c == '.')) {
      first_end = pos + 1;
      break;
    }
  }
  if (first_end == std::string::npos) throw ParseError(0, "expected two trees");
  return {parse_tree(text.substr(0, first_end)), parse_tree(text.substr(first_end))};
}

int run_checked(const std::vector<std::string>& args, std::istream& in,
                std::ostream& out) {
  CLI::App app{"Tamari interval-posets, the stat-swapping bijection, and flows"};
  app.require_subcommand(1);

  auto* count_cmd = app.add_subcommand("count", "count interval-posets of one size");
  int count_size = 0;
  bool count_enumerate = false;
  count_cmd->add_option("--size", count_size, "poset size")->required();
  count_cmd->add_flag("--enumerate", count_enumerate, "list every poset");

  auto* phi_cmd = app.add_subcommand("phi", "generating function truncation");
  int phi_max = 0;
  bool phi_symmetry = false;
  bool phi_equations = false;
  phi_cmd->add_option("--max-size", phi_max, "largest size included")->required();
  phi_cmd->add_flag("--check-symmetry", phi_symmetry, "verify the x/z symmetry");
  phi_cmd->add_flag("--check-equations", phi_equations, "verify both functional equations");

  auto* beta_cmd = app.add_subcommand("beta", "apply the statistic-swapping bijection");
  std::string beta_poset;
  bool beta_inv = false;
  beta_cmd->add_option("--poset", beta_poset, "poset text (stdin when omitted)");
  beta_cmd->add_flag("--inverse", beta_inv, "apply the inverse map");

  auto* invol_cmd = app.add_subcommand("check-involution", "beta composed with itself");
  int invol_max = 0;
  invol_cmd->add_option("--max-size", invol_max, "largest size checked")->required();

  auto* convert_cmd = app.add_subcommand("convert", "convert between object kinds");
  std::string convert_from, convert_to, convert_input;
  convert_cmd->add_option("--from", convert_from, "tree|dyck|poset|flow|tree-pair")->required();
  convert_cmd->add_option("--to", convert_to, "tree|dyck|poset|flow|tree-pair")->required();
  convert_cmd->add_option("--input", convert_input, "object text (stdin when omitted)");

  auto* flows_cmd = app.add_subcommand("flows", "enumerate flows of a forest");
  std::string flows_forest;
  bool flows_closed = false;
  int flows_exit = -1;
  bool flows_count = false;
  flows_cmd->add_option("--forest", flows_forest, "forest text (stdin when omitted)");
  auto* closed_opt = flows_cmd->add_flag("--closed", flows_closed, "closed flows only");
  auto* exit_opt =
      flows_cmd->add_option("--exit-rate", flows_exit, "flows with this exit rate");
  closed_opt->excludes(exit_opt);
  flows_cmd->add_flag("--count", flows_count, "print only the number of flows");

  auto* theorem_cmd =
      app.add_subcommand("verify-flow-theorem", "closed flows against Tamari ideals");
  int theorem_max = 0;
  theorem_cmd->add_option("--max-size", theorem_max, "largest forest size")->required();

  auto* render_cmd = app.add_subcommand("render", "render an object");
  std::string render_kind, render_input;
  bool render_dot_flag = false;
  render_cmd->add_flag("--dot", render_dot_flag, "emit DOT")->required();
  render_cmd->add_option("--kind", render_kind, "poset|flow")->required();
  render_cmd->add_option("--input", render_input, "object text (stdin when omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  }

  if (count_cmd->parsed()) {
    if (count_size < 0) throw DomainError(ErrorCode::OutOfRange, "negative size");
    if (count_enumerate) {
      for (const auto& poset : enumerate_interval_posets(count_size)) {
        out << render_poset(poset) << "\n";
      }
    } else {
      out << (count_size == 0 ? BigInt(1) : count_formula(count_size)).to_string()
          << "\n";
    }
    return 0;
  }

  if (phi_cmd->parsed()) {
    TriPoly p = phi(phi_max);
    out << p.to_string() << "\n";
    bool ok = true;
    if (phi_symmetry) {
      bool sym = p == p.swap_xz();
      out << "symmetry: " << (sym ? "pass" : "fail") << "\n";
      ok = ok && sym;
    }
    if (phi_equations) {
      auto [eq4, eq7] = check_functional_equations(phi_max);
      out << "eq4: " << (eq4 ? "pass" : "fail") << "\n";
      out << "eq7: " << (eq7 ? "pass" : "fail") << "\n";
      ok = ok && eq4 && eq7;
    }
    return ok ? 0 : 1;
  }

  if (beta_cmd->parsed()) {
    IntervalPoset poset = parse_poset(input_or_stdin(beta_poset, in));
    out << render_poset(beta_inv ? beta_inverse(poset) : beta(poset)) << "\n";
    return 0;
  }

  if (invol_cmd->parsed()) {
    bool all_ok = true;
    for (const auto& [n, ok] : check_beta_involution(invol_max)) {
      out << "n=" << n << ": " << (ok ? "pass" : "fail") << "\n";
      all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
  }

  if (convert_cmd->parsed()) {
    std::string text = input_or_stdin(convert_input, in);
    auto pair_key = convert_from + "->" + convert_to;
    if (pair_key == "tree->dyck") {
      out << render_dyck(dyck_from_tree(parse_tree(text))) << "\n";
    } else if (pair_key == "dyck->tree") {
      out << render_tree(tree_from_dyck(parse_dyck(text))) << "\n";
    } else if (pair_key == "tree-pair->poset") {
      auto [lo, hi] = parse_tree_pair(text);
      out << render_poset(from_tree_pair(lo, hi)) << "\n";
    } else if (pair_key == "poset->tree-pair") {
      IntervalPoset poset = parse_poset(text);
      out << render_tree(lower_tree(poset)) << " " << render_tree(upper_tree(poset))
          << "\n";
    } else if (pair_key == "poset->flow") {
      out << render_flow(interval_poset_to_flow(parse_poset(text))) << "\n";
    } else if (pair_key == "flow->poset") {
      out << render_poset(flow_to_interval_poset(parse_flow(text))) << "\n";
    } else {
      throw ParseError(0, "unsupported conversion '" + pair_key + "'");
    }
    return 0;
  }

  if (flows_cmd->parsed()) {
    if (!flows_closed && exit_opt->count() == 0) {
      throw ParseError(0, "flows requires --closed or --exit-rate");
    }
    PlanarForest forest = parse_forest(input_or_stdin(flows_forest, in));
    auto flows = flows_closed ? enumerate_closed_flows(forest)
                              : enumerate_flows_with_exit(forest, flows_exit);
    if (flows_count) {
      out << flows.size() << "\n";
    } else {
      for (const auto& flow : flows) out << render_flow(flow) << "\n";
    }
    return 0;
  }

  if (theorem_cmd->parsed()) {
    bool all_ok = true;
    for (int n = 1; n <= theorem_max; ++n) {
      auto trees = enumerate_trees(n);
      bool ok = true;
      for (const auto& forest : enumerate_forests(n)) {
        BinaryTree top = forest_to_upper_tree(forest);
        std::size_t ideal = 0;
        for (const auto& tree : trees) {
          if (tamari_leq(tree, top)) ++ideal;
        }
        if (enumerate_closed_flows(forest).size() != ideal) {
          ok = false;
          break;
        }
      }
      out << "n=" << n << ": " << (ok ? "pass" : "fail") << "\n";
      all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
  }

  if (render_cmd->parsed()) {
    std::string text = input_or_stdin(render_input, in);
    if (render_kind == "poset") {
      out << render_dot(parse_poset(text));
    } else if (render_kind == "flow") {
      out << render_dot(parse_flow(text));
    } else {
      throw ParseError(0, "render supports kinds 'poset' and 'flow'");
    }
    return 0;
  }

  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  try {
    return run_checked(args, in, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "parse error at offset " << e.offset() << ": " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tamari::cli
