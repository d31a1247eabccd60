#pragma once

#include <string>
#include <string_view>

#include "mbb/graph.hpp"

namespace mbb {

enum class EdgeListDialect {
  Strict,  // exactly two labels per line, duplicates rejected
  Konect,  // extra columns (weights, timestamps) ignored, duplicates merged
};

/// Plain-text edge list: one "left right" pair of 1-based labels per line,
/// '%' comments and blank lines ignored. An optional first data line with
/// three integers "L R E" declares the side sizes and edge count; without it
/// the sizes are the largest labels seen.
BipartiteGraph parse_edge_list(std::string_view text, EdgeListDialect dialect = EdgeListDialect::Strict);
BipartiteGraph read_edge_list(const std::string& path, EdgeListDialect dialect = EdgeListDialect::Strict);

/// Header line plus one edge per line, sorted.
std::string serialize_edge_list(const BipartiteGraph& g);
void write_edge_list(const std::string& path, const BipartiteGraph& g);

}  // namespace mbb
