#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fatchroma/solver.hpp"
#include "search_support.hpp"

namespace fatchroma {

using detail::Deadline;
using detail::SearchTimeout;
using detail::WallTimer;

namespace {

std::vector<int> vertices_by_degree(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&g](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

std::vector<int> greedy_clique(const Graph& g) {
    const auto order = vertices_by_degree(g);
    std::vector<int> best;
    for (int seed : order) {
        std::vector<int> clique{seed};
        for (int v : order) {
            if (v == seed)
                continue;
            bool joins = true;
            for (int u : clique)
                if (!g.adjacent(u, v)) {
                    joins = false;
                    break;
                }
            if (joins)
                clique.push_back(v);
        }
        if (clique.size() > best.size())
            best = std::move(clique);
    }
    return best;
}

/// Exact chromatic number by branch and bound: vertices are colored in
/// saturation-degree order (most distinctly-colored neighbors first, ties by
/// degree then index), a greedy clique is precolored to break color
/// symmetry, and a branch is cut as soon as it needs best-so-far colors.
class ChromaticSolver {
  public:
    ChromaticSolver(const Graph& g, Deadline deadline) : g_(g), n_(g.vertex_count()),
                                                         deadline_(deadline) {}

    SolveReport solve() {
        SolveReport report;
        const auto clique = greedy_clique(g_);
        lower_ = static_cast<int>(clique.size());

        color_.assign(n_, -1);
        best_ = n_ + 1;
        greedy_fill(); // seeds best_/best_color_ with a full DSATUR coloring
        const int greedy_upper = best_;
        report.bounds = Bounds{lower_, greedy_upper, "greedy-clique", "greedy-coloring"};

        if (best_ > lower_) {
            color_.assign(n_, -1);
            adjacent_colors_.assign(n_, std::vector<int>(best_, 0));
            saturation_.assign(n_, 0);
            int used = 0;
            for (int v : clique)
                used = std::max(used, set_color(v, used));
            try {
                branch(static_cast<int>(clique.size()), used);
            } catch (const SearchTimeout&) {
                report.status = SolveStatus::timeout;
                report.bounds.upper = best_; // a complete coloring this good exists
                report.stats.nodes = nodes_;
                return report;
            }
        }

        report.status = SolveStatus::solved;
        report.value = best_;
        report.coloring = best_color_;
        report.stats.nodes = nodes_;
        check(report);
        return report;
    }

  private:
    // Assigns the smallest feasible color; returns colors used after.
    int set_color(int v, int used) {
        int c = 0;
        while (adjacent_colors_[v][c] > 0)
            ++c;
        apply(v, c);
        return std::max(used, c + 1);
    }

    void apply(int v, int c) {
        color_[v] = c;
        for (int w : g_.neighbors(v))
            if (adjacent_colors_[w][c]++ == 0)
                ++saturation_[w];
    }

    void unapply(int v, int c) {
        color_[v] = -1;
        for (int w : g_.neighbors(v))
            if (--adjacent_colors_[w][c] == 0)
                --saturation_[w];
    }

    void greedy_fill() {
        adjacent_colors_.assign(n_, std::vector<int>(n_ + 1, 0));
        saturation_.assign(n_, 0);
        int used = 0;
        for (int step = 0; step < n_; ++step)
            used = set_color(pick_vertex(), used);
        best_ = used;
        best_color_ = color_;
    }

    int pick_vertex() const {
        int pick = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v] != -1)
                continue;
            if (pick == -1 || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick)))
                pick = v;
        }
        return pick;
    }

    void branch(int colored, int used) {
        if (best_ == lower_)
            return;
        if (colored == n_) {
            best_ = used;
            best_color_ = color_;
            return;
        }
        const int v = pick_vertex();
        const int limit = std::min(used, best_ - 2);
        for (int c = 0; c <= limit; ++c) {
            if (adjacent_colors_[v][c] > 0)
                continue;
            ++nodes_;
            if ((nodes_ & 1023) == 0 && deadline_.expired())
                throw SearchTimeout{};
            apply(v, c);
            branch(colored + 1, std::max(used, c + 1));
            unapply(v, c);
            if (best_ == lower_)
                return;
        }
    }

    void check(const SolveReport& report) const {
        const auto& coloring = *report.coloring;
        int max_color = -1;
        for (int c : coloring)
            max_color = std::max(max_color, c);
        if (max_color + 1 != *report.value)
            throw std::logic_error("chromatic_number: color count mismatch");
        for (const auto& [u, v] : g_.edges())
            if (coloring[u] == coloring[v])
                throw std::logic_error("chromatic_number: produced coloring is not proper");
    }

    const Graph& g_;
    int n_;
    Deadline deadline_;
    int lower_ = 1;
    int best_ = 0;
    std::vector<int> color_;
    std::vector<int> best_color_;
    std::vector<std::vector<int>> adjacent_colors_; // [v][c] neighbors of v colored c
    std::vector<int> saturation_;
    std::uint64_t nodes_ = 0;
};

} // namespace

SolveReport chromatic_number(const Graph& g, const SolveOptions& opts) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("chromatic_number: graph has no vertices");
    WallTimer timer;
    ChromaticSolver solver(g, Deadline::from(opts));
    auto report = solver.solve();
    report.stats.wall_ms = timer.elapsed_ms();
    return report;
}

} // namespace fatchroma
