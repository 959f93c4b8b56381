#include "fatchroma/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fatchroma {

namespace {
// Above this size the n*n bit matrix is not worth the memory.
constexpr int kBitMatrixLimit = 4096;
} // namespace

void Graph::init(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0)
        throw std::invalid_argument("graph: negative vertex count");
    n_ = n;
    adj_.assign(n, {});

    std::vector<std::pair<int, int>> normalized;
    normalized.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("graph: edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(u));
        normalized.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());
    edge_count_ = static_cast<long long>(normalized.size());

    for (const auto& [u, v] : normalized) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_)
        std::sort(list.begin(), list.end());

    if (n <= kBitMatrixLimit) {
        words_ = (n + 63) / 64;
        bits_.assign(static_cast<std::size_t>(n) * words_, 0);
        for (const auto& [u, v] : normalized) {
            bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= 1ULL << (v % 64);
            bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= 1ULL << (u % 64);
        }
    }
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("graph: vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (!bits_.empty())
        return (bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

DegreeStats degree_stats(const Graph& g) {
    DegreeStats s;
    const int n = g.vertex_count();
    s.degrees.resize(n);
    for (int v = 0; v < n; ++v)
        s.degrees[v] = g.degree(v);
    s.min_degree = n == 0 ? 0 : *std::min_element(s.degrees.begin(), s.degrees.end());
    int gcd = 0;
    int min_pos = 0;
    for (int d : s.degrees) {
        if (d == 0)
            continue;
        gcd = std::gcd(gcd, d);
        min_pos = min_pos == 0 ? d : std::min(min_pos, d);
    }
    if (gcd > 0) {
        s.degree_gcd = gcd;
        s.min_positive_degree = min_pos;
    }
    return s;
}

ComponentDecomposition connected_components(const Graph& g) {
    const int n = g.vertex_count();
    ComponentDecomposition out;
    std::vector<bool> seen(n, false);
    std::vector<int> stack;
    for (int start = 0; start < n; ++start) {
        if (seen[start])
            continue;
        std::vector<int> comp;
        stack.push_back(start);
        seen[start] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
    }
    return out;
}

} // namespace fatchroma
