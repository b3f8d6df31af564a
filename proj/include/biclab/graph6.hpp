#pragma once

#include <functional>
#include <istream>
#include <string>
#include <string_view>

#include "biclab/graph.hpp"

namespace biclab {

/// Decodes one graph6 line (no trailing newline). Throws ParseError naming
/// the offending byte offset, CapabilityError above 64 vertices.
Graph parse_graph6(std::string_view text);

/// Encodes g in graph6; orders above 62 use the four-byte header.
std::string write_graph6(const Graph& g);

/// One non-comment line of a graph6 corpus.
struct Graph6Line {
    std::size_t line_number;  // 1-based
    std::string text;
};

/// Calls `visit` for every line that is neither blank nor a '#' comment.
/// Trailing '\r' and surrounding whitespace are stripped.
void for_each_graph6_line(std::istream& in, const std::function<void(const Graph6Line&)>& visit);

}  // namespace biclab
