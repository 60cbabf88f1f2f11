#pragma once

#include <string>
#include <string_view>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

/// Encodes g in graph6: a size header followed by the upper triangle in
/// column order x(0,1), x(0,2), x(1,2), x(0,3), ... packed six bits per byte,
/// each byte offset by 63. Orders above 62 use the 126-prefixed long header.
std::string to_graph6(const Graph& g);

/// Inverse of to_graph6. Accepts an optional ">>graph6<<" prefix and a
/// trailing newline. Throws ParseError with the offending byte offset.
Graph parse_graph6(std::string_view s);

}  // namespace cliquedyn
