#include "fatchroma/fat.hpp"

#include <algorithm>
#include <stdexcept>

namespace fatchroma {

Partition Partition::canonical(std::vector<std::vector<int>> blocks) {
    for (auto& block : blocks)
        std::sort(block.begin(), block.end());
    std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
        const int ma = a.empty() ? -1 : a.front();
        const int mb = b.empty() ? -1 : b.front();
        return ma < mb;
    });
    return Partition{std::move(blocks)};
}

void validate_partition(const Graph& g, const Partition& p) {
    const int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (int i = 0; i < p.block_count(); ++i) {
        const auto& block = p.blocks[i];
        if (block.empty())
            throw std::invalid_argument("partition: block " + std::to_string(i) + " is empty");
        for (int v : block) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                            " out of range [0, " + std::to_string(n) + ")");
            if (owner[v] != -1)
                throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                            " appears in blocks " + std::to_string(owner[v]) +
                                            " and " + std::to_string(i));
            owner[v] = i;
        }
    }
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1)
            throw std::invalid_argument("partition: vertex " + std::to_string(v) +
                                        " not covered by any block");
}

int neighbor_count(const Graph& g, int v, std::span<const int> s) {
    if (v < 0 || v >= g.vertex_count())
        throw std::out_of_range("neighbor_count: vertex " + std::to_string(v) + " out of range");
    int count = 0;
    for (int w : s) {
        if (w < 0 || w >= g.vertex_count())
            throw std::out_of_range("neighbor_count: set member " + std::to_string(w) +
                                    " out of range");
        if (g.adjacent(v, w))
            ++count;
    }
    return count;
}

namespace {

std::vector<int> block_of_vertex(const Graph& g, const Partition& p) {
    std::vector<int> owner(g.vertex_count(), -1);
    for (int i = 0; i < p.block_count(); ++i)
        for (int v : p.blocks[i])
            owner[v] = i;
    return owner;
}

} // namespace

InferenceOutcome infer_fat_parameters(const Graph& g, const Partition& p) {
    validate_partition(g, p);
    const int k = p.block_count();

    // k = 1 constrains only beta, an edgeless graph constrains nothing;
    // both degenerate cases report the monochromatic parameters.
    if (k == 1 || !g.has_edges())
        return FatWitness{k, Partition::canonical(p.blocks), Rational(0, 1), Rational(1, 1)};

    const auto owner = block_of_vertex(g, p);
    std::optional<Rational> alpha, beta;
    int alpha_pin_vertex = -1, alpha_pin_block = -1;
    int beta_pin_vertex = -1, beta_pin_block = -1;

    for (int v = 0; v < g.vertex_count(); ++v) {
        const int deg = g.degree(v);
        if (deg == 0)
            continue;
        for (int i = 0; i < k; ++i) {
            const int e = neighbor_count(g, v, p.blocks[i]);
            const Rational observed(e, deg);
            if (owner[v] == i) {
                if (!beta) {
                    beta = observed;
                    beta_pin_vertex = v;
                    beta_pin_block = i;
                } else if (*beta != observed) {
                    return FatRejection{
                        v, i, observed, *beta,
                        "vertex " + std::to_string(v) + " needs beta = " + observed.str() +
                            " for its block " + std::to_string(i) + ", but vertex " +
                            std::to_string(beta_pin_vertex) + " fixed beta = " + beta->str() +
                            " via block " + std::to_string(beta_pin_block)};
                }
            } else {
                if (!alpha) {
                    alpha = observed;
                    alpha_pin_vertex = v;
                    alpha_pin_block = i;
                } else if (*alpha != observed) {
                    return FatRejection{
                        v, i, observed, *alpha,
                        "vertex " + std::to_string(v) + " needs alpha = " + observed.str() +
                            " for block " + std::to_string(i) + ", but vertex " +
                            std::to_string(alpha_pin_vertex) + " fixed alpha = " + alpha->str() +
                            " via block " + std::to_string(alpha_pin_block)};
                }
            }
        }
    }
    // A positive-degree vertex exists and sees every block, so with k >= 2
    // both parameters are pinned by the loop above.
    return FatWitness{k, Partition::canonical(p.blocks), *alpha, *beta};
}

std::optional<FatRejection> verify_fat(const Graph& g, const Partition& p, const Rational& alpha,
                                       const Rational& beta) {
    if (alpha > Rational(1, 1) || beta > Rational(1, 1))
        throw std::invalid_argument("verify_fat: parameters must lie in [0, 1]");
    validate_partition(g, p);

    const auto owner = block_of_vertex(g, p);
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int deg = g.degree(v);
        for (int i = 0; i < p.block_count(); ++i) {
            const int e = neighbor_count(g, v, p.blocks[i]);
            const Rational& required = owner[v] == i ? beta : alpha;
            if (!required.equals_ratio(e, deg)) {
                const char* which = owner[v] == i ? "beta" : "alpha";
                return FatRejection{
                    v, i, Rational(e, deg), required,
                    "e(" + std::to_string(v) + ", block " + std::to_string(i) + ") = " +
                        std::to_string(e) + " but " + which + " * deg = " + required.str() +
                        " * " + std::to_string(deg)};
            }
        }
    }
    return std::nullopt;
}

FatWitness component_coloring(const Graph& g) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("component_coloring: graph has no vertices");
    auto comps = connected_components(g);
    FatWitness w{comps.count(), Partition{std::move(comps.components)}, Rational(0, 1),
                 Rational(1, 1)};
    return w;
}

} // namespace fatchroma
