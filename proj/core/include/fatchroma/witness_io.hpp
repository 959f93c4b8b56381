#pragma once

#include <string>
#include <string_view>

#include "fatchroma/fat.hpp"

namespace fatchroma {

/// Witness JSON schema:
///   { "k": int, "blocks": [[int]], "alpha": "p/q", "beta": "p/q" }
/// Fractions are lowest-terms strings; blocks are in canonical order
/// (sorted members, ordered by smallest contained vertex).
std::string witness_to_json(const FatWitness& w);

/// Inverse of witness_to_json; throws ParseError on malformed input.
FatWitness witness_from_json(std::string_view text);

/// Coloring file for `verify`: one line per vertex, "<vertex> <color-label>",
/// labels are arbitrary strings mapped to blocks. Every vertex of the graph
/// must appear exactly once. Blank lines are skipped. Throws ParseError with
/// the 1-based line number.
Partition parse_coloring_file(std::string_view text, int vertex_count);

} // namespace fatchroma
