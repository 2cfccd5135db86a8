#pragma once

#include <string>

#include "severi/partition.hpp"

namespace severi::cli {

/// Undirected DOT text. Nodes are emitted in vertex order, labelled with the
/// partition's "[(a,b,c),...]" string; edges follow in sorted order. The
/// output depends only on the graph, so it is byte-stable.
std::string export_dot(const PartitionGraph& graph);

}  // namespace severi::cli
