#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fatchroma {

/// Simple undirected graph on vertices 0..n-1. Immutable after construction:
/// neighbor lists are sorted and deduplicated, self-loops are rejected, and
/// every edge is stored symmetrically. Safe to share across threads.
class Graph {
  public:
    Graph() = default;

    explicit Graph(int n) { init(n, {}); }

    Graph(int n, std::span<const std::pair<int, int>> edges) { init(n, edges); }

    Graph(int n, const std::vector<std::pair<int, int>>& edges)
        : Graph(n, std::span<const std::pair<int, int>>(edges)) {}

    int vertex_count() const { return n_; }
    long long edge_count() const { return edge_count_; }
    bool has_edges() const { return edge_count_ > 0; }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool adjacent(int u, int v) const;

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

  private:
    void init(int n, std::span<const std::pair<int, int>> edges);
    void check_vertex(int v) const;

    int n_ = 0;
    long long edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    // Bit-matrix rows for O(1) adjacency tests; built only for small n,
    // larger graphs fall back to binary search on the sorted lists.
    std::vector<std::uint64_t> bits_;
    int words_ = 0;
};

/// Per-vertex degrees and the aggregates the solver needs. The gcd and the
/// minimum positive degree are absent exactly when the graph has no edges.
struct DegreeStats {
    std::vector<int> degrees;
    int min_degree = 0;
    std::optional<int> min_positive_degree;
    std::optional<int> degree_gcd;
};

/// Connected components as disjoint sorted vertex sets covering V(G),
/// ordered by smallest contained vertex.
struct ComponentDecomposition {
    std::vector<std::vector<int>> components;

    int count() const { return static_cast<int>(components.size()); }
};

DegreeStats degree_stats(const Graph& g);
ComponentDecomposition connected_components(const Graph& g);

} // namespace fatchroma
