#pragma once

#include <string>
#include <string_view>

#include "fatchroma/graph.hpp"

namespace fatchroma {

/// Parses one graph6 line (the optional ">>graph6<<" prefix is accepted).
/// Strict: header must be canonical for n, every byte in [63, 126], padding
/// bits zero, no trailing bytes. Throws ParseError with the byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding; uses the extended header for n >= 63.
std::string emit_graph6(const Graph& g);

} // namespace fatchroma
