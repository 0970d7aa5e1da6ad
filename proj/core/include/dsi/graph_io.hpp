#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dsi/graph.hpp"

namespace dsi {

// graph6: first the order (one byte n+63 for n <= 62, or '~' followed by
// three bytes of 6 bits each for larger n), then the upper triangle in
// column-major order, 6 bits per byte, each byte offset by 63. Every data
// byte must lie in 63..126.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: first line "n m", then one "u v" pair per line,
// 0-indexed. Duplicate pairs collapse.
Graph read_edge_list(std::istream& in);

}  // namespace dsi
