#pragma once

#include <string>
#include <string_view>

#include "fatchroma/graph.hpp"

namespace fatchroma {

/// DIMACS col format: "c" comment lines, one "p edge <n> <m>" line, then
/// "e <u> <v>" lines with 1-based endpoints. Duplicate edge lines collapse.
/// The edge count on the p-line is advisory. Throws ParseError carrying the
/// 1-based line number.
Graph parse_dimacs(std::string_view text);

std::string emit_dimacs(const Graph& g);

} // namespace fatchroma
