#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "tamari/catalan.hpp"
#include "tamari/flows.hpp"
#include "tamari/interval_poset.hpp"

namespace tamari::cli {

using Object = std::variant<BinaryTree, DyckPath, IntervalPoset, PlanarForest, Flow>;

// Dispatch by kind name: tree | dyck | poset | forest | flow.
Object parse_object(const std::string& kind, const std::string& text);
std::string render_object(const Object& object);

// DOT digraph; increasing cover edges blue, decreasing red. Flows draw
// `label:input` nodes with rate-annotated child-to-parent edges.
std::string render_dot(const IntervalPoset& poset);
std::string render_dot(const Flow& flow);

// Exit codes: 0 success, 1 domain validation failure, 2 parse failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace tamari::cli
