#include <algorithm>
#include <stdexcept>

#include "fatchroma/solver.hpp"

namespace fatchroma {

namespace {

// Enumerates set partitions of {0..n-1} as restricted growth strings:
// rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
template <typename Visit>
void enumerate_partitions(int n, std::vector<int>& rgs, int pos, int max_block, Visit&& visit) {
    if (pos == n) {
        visit(rgs, max_block + 1);
        return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
        rgs[pos] = b;
        enumerate_partitions(n, rgs, pos + 1, std::max(max_block, b), visit);
    }
}

bool proper_with(const Graph& g, int v, int c, const std::vector<int>& color) {
    for (int w : g.neighbors(v))
        if (w < v && color[w] == c)
            return false;
    return true;
}

bool colorable(const Graph& g, int k, int v, std::vector<int>& color) {
    if (v == g.vertex_count())
        return true;
    for (int c = 0; c < k; ++c) {
        if (!proper_with(g, v, c, color))
            continue;
        color[v] = c;
        if (colorable(g, k, v + 1, color))
            return true;
    }
    color[v] = -1;
    return false;
}

} // namespace

int brute_force_chi_fat(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 12)
        throw std::invalid_argument("brute_force_chi_fat: requires 1 <= |V| <= 12");
    std::vector<int> rgs(n, 0);
    int best = 0;
    enumerate_partitions(n, rgs, 1, 0, [&](const std::vector<int>& assignment, int k) {
        std::vector<std::vector<int>> blocks(k);
        for (int v = 0; v < n; ++v)
            blocks[assignment[v]].push_back(v);
        if (accepted(infer_fat_parameters(g, Partition{std::move(blocks)})))
            best = std::max(best, k);
    });
    return best;
}

int brute_force_chromatic(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1 || n > 10)
        throw std::invalid_argument("brute_force_chromatic: requires 1 <= |V| <= 10");
    std::vector<int> color(n, -1);
    for (int k = 1; k < n; ++k) {
        if (colorable(g, k, 0, color))
            return k;
        std::fill(color.begin(), color.end(), -1);
    }
    return n;
}

} // namespace fatchroma
