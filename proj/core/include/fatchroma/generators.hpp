#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fatchroma/graph.hpp"

namespace fatchroma {

/// n vertices, no edges.
Graph edgeless(int n);

/// `count` vertex-disjoint cliques of order `size`; clique i occupies the
/// vertex range [i*size, (i+1)*size).
Graph disjoint_cliques(int count, int size);

/// l1 - 1 cliques of order l1 followed by one clique of order l2, laid out
/// consecutively. Requires 1 < l1 < l2.
Graph cliques_mixed(int l1, int l2);

/// K_{n,n} minus a perfect matching: vertices 0..n-1 form one side, n..2n-1
/// the other, with edges {i, n+j} for i != j. (n-1)-regular.
Graph crown(int n);

/// Complete graph on w_0..w_{n-1} (vertices 0..n-1) with (n-1)/2 pendant
/// triangles attached to each w_i. The triangle pair for (i, j) sits at
/// vertices n + i*(n-1) + 2j and n + i*(n-1) + 2j + 1. Requires odd n >= 3.
Graph pendant_triangles(int n);

/// K_n on vertices 0..n-1 plus a pendant vertex n attached to vertex 0.
/// Requires n >= 3.
Graph clique_with_pendant(int n);

enum class Family {
    edgeless,
    disjoint_cliques,
    cliques_mixed,
    crown,
    pendant_triangles,
    clique_with_pendant,
};

/// A named family instance, the CLI-facing form of the constructors above.
struct FamilySpec {
    Family family;
    std::map<std::string, long long> params;
};

Family family_from_name(std::string_view name);
std::string family_name(Family family);
std::vector<std::string> family_param_names(Family family);
std::vector<Family> all_families();

Graph build_family(const FamilySpec& spec);

} // namespace fatchroma
