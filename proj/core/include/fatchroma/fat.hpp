#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "fatchroma/graph.hpp"
#include "fatchroma/rational.hpp"

namespace fatchroma {

/// An ordered list of nonempty, disjoint vertex blocks covering V(G): the
/// color classes of a candidate coloring. Canonical form sorts each block
/// and orders blocks by smallest contained vertex.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }

    static Partition canonical(std::vector<std::vector<int>> blocks);

    friend bool operator==(const Partition& a, const Partition& b) = default;
};

/// Throws std::invalid_argument if p has an empty block, repeats a vertex,
/// misses a vertex of g, or names a vertex outside [0, n).
void validate_partition(const Graph& g, const Partition& p);

/// A certified fair-and-tolerant coloring: every vertex v sees exactly
/// alpha*deg(v) neighbors in each block it does not belong to and exactly
/// beta*deg(v) neighbors in its own block.
struct FatWitness {
    int k = 0;
    Partition partition;
    Rational alpha;
    Rational beta;

    friend bool operator==(const FatWitness& a, const FatWitness& b) = default;
};

/// Evidence against a candidate coloring: the first vertex/block pair, in
/// (vertex, block) lexicographic order, whose neighbor count disagrees with
/// the required ratio. `observed` is e(vertex, block)/deg(vertex); both
/// sides are checkable with neighbor_count alone.
struct FatRejection {
    int vertex = 0;
    int block = 0;
    Rational observed;
    Rational required;
    std::string detail;
};

using InferenceOutcome = std::variant<FatWitness, FatRejection>;

inline bool accepted(const InferenceOutcome& o) {
    return std::holds_alternative<FatWitness>(o);
}

/// e(v, S) = |S intersect N(v)|.
int neighbor_count(const Graph& g, int v, std::span<const int> s);

/// Determines the unique (alpha, beta) making p a FAT coloring of g, or the
/// first conflicting constraint pair. Degenerate cases where a parameter is
/// unconstrained (k = 1, or an edgeless graph) report alpha = 0, beta = 1.
InferenceOutcome infer_fat_parameters(const Graph& g, const Partition& p);

/// Exact check of the FAT condition for the given parameters; nullopt on
/// acceptance. alpha and beta must lie in [0, 1].
std::optional<FatRejection> verify_fat(const Graph& g, const Partition& p, const Rational& alpha,
                                       const Rational& beta);

/// One block per connected component, alpha = 0, beta = 1. Always a valid
/// FAT coloring with k equal to the component count.
FatWitness component_coloring(const Graph& g);

} // namespace fatchroma
