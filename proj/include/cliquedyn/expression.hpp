#pragma once

#include <string_view>

#include "cliquedyn/graph.hpp"

namespace cliquedyn {

/// Builds a graph from a constructor expression.
///
///   expr   := family | op "(" expr { "," expr } ")"
///   family := "cycle" N | "complete" N | "empty" N | "path" N
///           | "octahedron" M | "bipartite" A B | "petersen"
///   op     := "union" | "join" | "complement"
///
/// Family arguments may also be written in parentheses, e.g. "cycle(8)".
/// "complement" takes exactly one argument; "union" and "join" take one or
/// more. Throws ParseError (with byte offset) on malformed text and
/// DomainError on invalid parameters such as "cycle 2".
Graph parse_expression(std::string_view text);

}  // namespace cliquedyn
