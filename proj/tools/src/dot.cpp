#include "severi/cli/dot.hpp"

#include <algorithm>

namespace severi::cli {

std::string export_dot(const PartitionGraph& graph) {
  std::string out = "graph {\n";
  for (const auto& v : graph.vertices) out += "  \"" + v.to_string() + "\";\n";
  auto edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [i, j] : edges) {
    out += "  \"" + graph.vertices.at(i).to_string() + "\" -- \"" + graph.vertices.at(j).to_string() +
           "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace severi::cli
