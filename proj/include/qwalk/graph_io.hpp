#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "qwalk/graph.hpp"

namespace qwalk {

// Graph file format:
//   {"vertices": N, "degree": d, "edges": [{"u": j, "pu": k, "v": j2, "pv": k2}, ...]}
// Syntax errors report line and column; schema errors report the field path.

PortGraph parse_graph_json(std::string_view text);
PortGraph load_graph_file(const std::filesystem::path& path);
std::string graph_to_json(const PortGraph& graph);

}  // namespace qwalk
