#include "qwalk/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qwalk {

using nlohmann::json;

namespace {

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

int require_int(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(path + "." + key, "missing field");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(path + "." + key, "expected an integer");
  return v.get<int>();
}

}  // namespace

PortGraph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", "graph JSON syntax error at " + line_column(text, e.byte) + ": " +
                              e.what());
  }
  if (!doc.is_object()) throw ConfigError("$", "expected a JSON object");
  const int n = require_int(doc, "vertices", "$");
  const int d = require_int(doc, "degree", "$");
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ConfigError("$.edges", "expected an array");
  }
  EdgeList edges;
  const json& arr = doc["edges"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "$.edges[" + std::to_string(i) + "]";
    if (!arr[i].is_object()) throw ConfigError(path, "expected an object");
    edges.push_back({{require_int(arr[i], "u", path), require_int(arr[i], "pu", path)},
                     {require_int(arr[i], "v", path), require_int(arr[i], "pv", path)}});
  }
  return PortGraph::from_edge_list(edges, n, d);
}

PortGraph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--graph", "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

std::string graph_to_json(const PortGraph& graph) {
  json edges = json::array();
  for (const Edge& e : graph.to_edge_list()) {
    edges.push_back({{"u", e.a.vertex}, {"pu", e.a.port}, {"v", e.b.vertex}, {"pv", e.b.port}});
  }
  json doc = {{"vertices", graph.num_vertices()}, {"degree", graph.degree()}, {"edges", edges}};
  return doc.dump();
}

}  // namespace qwalk
