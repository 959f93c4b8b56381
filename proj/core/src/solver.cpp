#include "fatchroma/solver.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <numeric>
#include <thread>

#include "search_support.hpp"

namespace fatchroma {

using detail::Deadline;
using detail::SearchTimeout;
using detail::WallTimer;

std::vector<Rational> candidate_alphas(const Graph& g, int k) {
    if (k < 2)
        throw std::invalid_argument("candidate_alphas: requires k >= 2");
    const auto stats = degree_stats(g);
    if (!stats.degree_gcd)
        throw std::invalid_argument(
            "candidate_alphas: edgeless graph (every partition is FAT, no ratio constraint)");
    const long long d = *stats.degree_gcd;
    std::vector<Rational> out;
    for (long long i = 0; i * (k - 1) <= d; ++i)
        out.emplace_back(i, d);
    return out;
}

namespace {

struct SearchAborted {};

struct BranchOutcome {
    enum class Kind { feasible, infeasible, timeout, aborted };
    Kind kind = Kind::infeasible;
    std::optional<FatWitness> witness;
    std::uint64_t nodes = 0;
};

/// Exhaustive backtracking search for a FAT k-coloring with a fixed positive
/// alpha. Vertices are assigned in descending-degree order; block labels are
/// symmetry-broken by restricted growth (block j is opened only after block
/// j-1). Per-vertex per-block neighbor counts prune any assignment that
/// overshoots its target; a vertex whose count in some block already exceeds
/// the off-class target is forced into that block.
class FatSearch {
  public:
    FatSearch(const Graph& g, int k, Rational alpha, Rational beta, Deadline deadline,
              const std::atomic<int>* winner, int branch_index, bool deterministic)
        : g_(g), n_(g.vertex_count()), k_(k), alpha_(std::move(alpha)), beta_(std::move(beta)),
          deadline_(deadline), winner_(winner), branch_index_(branch_index),
          deterministic_(deterministic) {}

    BranchOutcome run() {
        own_.resize(n_);
        off_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            const int deg = g_.degree(v);
            const auto own = beta_.times_exact(deg);
            const auto off = alpha_.times_exact(deg);
            if (!own || !off)
                return {BranchOutcome::Kind::infeasible, std::nullopt, 0}; // non-integer target
            own_[v] = *own;
            off_[v] = *off;
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [this](int a, int b) { return g_.degree(a) > g_.degree(b); });
        assignment_.assign(n_, -1);
        forced_.assign(n_, -1);
        counts_.assign(static_cast<std::size_t>(n_) * k_, 0);

        try {
            if (dfs(0, 0))
                return {BranchOutcome::Kind::feasible, capture_witness(), nodes_};
            return {BranchOutcome::Kind::infeasible, std::nullopt, nodes_};
        } catch (const SearchTimeout&) {
            return {BranchOutcome::Kind::timeout, std::nullopt, nodes_};
        } catch (const SearchAborted&) {
            return {BranchOutcome::Kind::aborted, std::nullopt, nodes_};
        }
    }

  private:
    int& count(int v, int b) { return counts_[static_cast<std::size_t>(v) * k_ + b]; }

    void poll() {
        if ((nodes_ & 1023) != 0)
            return;
        if (deadline_.expired())
            throw SearchTimeout{};
        if (winner_ != nullptr) {
            const int w = winner_->load(std::memory_order_relaxed);
            if (deterministic_ ? w < branch_index_ : w != INT_MAX)
                throw SearchAborted{};
        }
    }

    bool fits(int u, int b) const {
        for (int c = 0; c < k_; ++c) {
            const long long target = c == b ? own_[u] : off_[u];
            if (counts_[static_cast<std::size_t>(u) * k_ + c] > target)
                return false;
        }
        return true;
    }

    // Increment neighbor counts of u for block b, checking consistency.
    // Returns the number of neighbors updated before a conflict (all of them
    // on success); `new_forced` collects vertices forced during this step.
    int apply(int u, int b, std::vector<int>& new_forced, bool& ok) {
        const auto& nbrs = g_.neighbors(u);
        for (std::size_t t = 0; t < nbrs.size(); ++t) {
            const int w = nbrs[t];
            const int c = ++count(w, b);
            if (assignment_[w] != -1) {
                if (c > (assignment_[w] == b ? own_[w] : off_[w])) {
                    ok = false;
                    return static_cast<int>(t) + 1;
                }
            } else if (c > off_[w]) {
                // w can no longer sit outside block b.
                if (c > own_[w] || (forced_[w] != -1 && forced_[w] != b)) {
                    ok = false;
                    return static_cast<int>(t) + 1;
                }
                if (forced_[w] == -1) {
                    forced_[w] = b;
                    new_forced.push_back(w);
                }
            }
        }
        ok = true;
        return static_cast<int>(nbrs.size());
    }

    void undo(int u, int b, int updated, const std::vector<int>& new_forced) {
        const auto& nbrs = g_.neighbors(u);
        for (int t = 0; t < updated; ++t)
            --count(nbrs[t], b);
        for (int w : new_forced)
            forced_[w] = -1;
    }

    bool dfs(int pos, int used) {
        if (pos == n_)
            return used == k_;
        const int u = order_[pos];
        const int remaining_after = n_ - pos - 1;

        int first = 0, last = std::min(used, k_ - 1);
        if (forced_[u] != -1)
            first = last = forced_[u];
        for (int b = first; b <= last; ++b) {
            const int new_used = used + (b == used ? 1 : 0);
            if (k_ - new_used > remaining_after)
                continue; // not enough vertices left to open the missing blocks
            if (!fits(u, b))
                continue;
            ++nodes_;
            poll();
            assignment_[u] = b;
            std::vector<int> new_forced;
            bool ok = false;
            const int updated = apply(u, b, new_forced, ok);
            if (ok && dfs(pos + 1, new_used))
                return true;
            undo(u, b, updated, new_forced);
            assignment_[u] = -1;
        }
        return false;
    }

    FatWitness capture_witness() const {
        std::vector<std::vector<int>> blocks(k_);
        for (int v = 0; v < n_; ++v)
            blocks[assignment_[v]].push_back(v);
        return FatWitness{k_, Partition::canonical(std::move(blocks)), alpha_, beta_};
    }

    const Graph& g_;
    int n_;
    int k_;
    Rational alpha_;
    Rational beta_;
    Deadline deadline_;
    const std::atomic<int>* winner_;
    int branch_index_;
    bool deterministic_;

    std::vector<long long> own_, off_;
    std::vector<int> order_;
    std::vector<int> assignment_;
    std::vector<int> forced_;
    std::vector<int> counts_;
    std::uint64_t nodes_ = 0;
};

FatWitness single_block_witness(const Graph& g) {
    std::vector<int> all(g.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    return FatWitness{1, Partition{{std::move(all)}}, Rational(0, 1), Rational(1, 1)};
}

// alpha = 0 forces beta = 1, so blocks are unions of components: feasible
// exactly when k does not exceed the component count. The witness keeps the
// first k-1 components as their own blocks and pools the rest.
std::optional<FatWitness> alpha_zero_witness(const Graph& g, int k,
                                             const ComponentDecomposition& comps) {
    if (k > comps.count())
        return std::nullopt;
    std::vector<std::vector<int>> blocks;
    blocks.reserve(k);
    for (int i = 0; i < k - 1; ++i)
        blocks.push_back(comps.components[i]);
    std::vector<int> rest;
    for (int i = k - 1; i < comps.count(); ++i)
        rest.insert(rest.end(), comps.components[i].begin(), comps.components[i].end());
    std::sort(rest.begin(), rest.end());
    blocks.push_back(std::move(rest));
    return FatWitness{k, Partition{std::move(blocks)}, Rational(0, 1), Rational(1, 1)};
}

void check_internal(const Graph& g, const FatWitness& w) {
    if (verify_fat(g, w.partition, w.alpha, w.beta))
        throw std::logic_error("solver: produced witness failed verification");
}

KFeasibility fat_k_feasible_impl(const Graph& g, int k, const SolveOptions& opts,
                                 Deadline deadline) {
    const int n = g.vertex_count();
    if (k < 1 || k > n)
        throw std::invalid_argument("fat_k_feasible: k must lie in [1, " + std::to_string(n) +
                                    "]");
    KFeasibility result;
    if (k == 1) {
        result.status = KFeasibility::Status::feasible;
        result.witness = single_block_witness(g);
        return result;
    }

    const auto comps = connected_components(g);
    if (auto w = alpha_zero_witness(g, k, comps)) {
        result.status = KFeasibility::Status::feasible;
        result.witness = std::move(w);
        check_internal(g, *result.witness);
        return result;
    }
    result.stats.branches_pruned += 1; // the alpha = 0 branch is closed

    if (!g.has_edges()) {
        // Unreachable in practice: an edgeless graph has n components and
        // k <= n always succeeds above.
        result.status = KFeasibility::Status::infeasible;
        return result;
    }

    std::vector<Rational> alphas;
    for (auto& a : candidate_alphas(g, k))
        if (!a.is_zero())
            alphas.push_back(std::move(a));

    std::vector<BranchOutcome> outcomes(alphas.size());
    auto run_branch = [&](std::size_t i, const std::atomic<int>* winner) {
        const Rational beta = Rational(1, 1) - (static_cast<long long>(k) - 1) * alphas[i];
        FatSearch search(g, k, alphas[i], beta, deadline, winner, static_cast<int>(i),
                         opts.deterministic);
        return search.run();
    };

    const int workers = std::min<int>(std::max(opts.threads, 1), static_cast<int>(alphas.size()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            outcomes[i] = run_branch(i, nullptr);
            if (outcomes[i].kind == BranchOutcome::Kind::feasible)
                break;
        }
    } else {
        std::atomic<int> winner{INT_MAX};
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= alphas.size())
                    return;
                auto outcome = run_branch(i, &winner);
                if (outcome.kind == BranchOutcome::Kind::feasible) {
                    int cur = winner.load();
                    while (static_cast<int>(i) < cur &&
                           !winner.compare_exchange_weak(cur, static_cast<int>(i))) {
                    }
                }
                outcomes[i] = std::move(outcome);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int t = 0; t < workers; ++t)
            pool.emplace_back(work);
        for (auto& t : pool)
            t.join();
    }

    bool timed_out = false;
    std::size_t best = alphas.size();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        result.stats.nodes += outcomes[i].nodes;
        switch (outcomes[i].kind) {
        case BranchOutcome::Kind::feasible:
            if (i < best)
                best = i;
            break;
        case BranchOutcome::Kind::infeasible:
            result.stats.branches_pruned += 1;
            break;
        case BranchOutcome::Kind::timeout:
            timed_out = true;
            break;
        case BranchOutcome::Kind::aborted:
            break;
        }
    }
    if (best < alphas.size()) {
        result.status = KFeasibility::Status::feasible;
        result.witness = std::move(outcomes[best].witness);
        check_internal(g, *result.witness);
    } else if (timed_out) {
        result.status = KFeasibility::Status::timeout;
    } else {
        result.status = KFeasibility::Status::infeasible;
    }
    return result;
}

} // namespace

KFeasibility fat_k_feasible(const Graph& g, int k, const SolveOptions& opts) {
    WallTimer timer;
    auto result = fat_k_feasible_impl(g, k, opts, Deadline::from(opts));
    result.stats.wall_ms = timer.elapsed_ms();
    return result;
}

Bounds chi_fat_upper_bound(const Graph& g) {
    Bounds b;
    const int c = connected_components(g).count();
    b.lower = c;
    b.lower_tag = "component-count";
    if (!g.has_edges()) {
        b.upper = g.vertex_count();
        b.upper_tag = "edgeless-vertex-count";
        return b;
    }
    const int dplus = *degree_stats(g).min_positive_degree;
    if (c >= dplus + 1) {
        b.upper = c;
        b.upper_tag = "component-count";
    } else {
        b.upper = dplus + 1;
        b.upper_tag = "min-positive-degree-plus-one";
    }
    return b;
}

SolveReport chi_fat(const Graph& g, const SolveOptions& opts) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("chi_fat: graph has no vertices");
    WallTimer timer;
    SolveReport report;
    report.bounds = chi_fat_upper_bound(g);
    const Deadline deadline = Deadline::from(opts);

    for (int k = report.bounds.upper; k >= 1; --k) {
        auto r = fat_k_feasible_impl(g, k, opts, deadline);
        report.stats.absorb(r.stats);
        if (r.status == KFeasibility::Status::feasible) {
            report.status = SolveStatus::solved;
            report.value = k;
            report.fat_witness = std::move(r.witness);
            break;
        }
        if (r.status == KFeasibility::Status::timeout) {
            report.status = SolveStatus::timeout;
            break;
        }
    }
    report.stats.wall_ms = timer.elapsed_ms();
    return report;
}

SpectrumReport fat_spectrum(const Graph& g, const SolveOptions& opts, int cap) {
    const int n = g.vertex_count();
    if (n < 1)
        throw std::invalid_argument("fat_spectrum: graph has no vertices");
    if (n > cap)
        throw SpectrumCapExceeded("fat_spectrum: graph has " + std::to_string(n) +
                                  " vertices, cap is " + std::to_string(cap) +
                                  "; use chi_fat instead");
    WallTimer timer;
    SpectrumReport report;
    const Deadline deadline = Deadline::from(opts);
    for (int k = 1; k <= n; ++k) {
        auto r = fat_k_feasible_impl(g, k, opts, deadline);
        report.stats.absorb(r.stats);
        if (r.status == KFeasibility::Status::timeout) {
            report.status = SolveStatus::timeout;
            break;
        }
        if (r.status == KFeasibility::Status::feasible)
            report.feasible.emplace(k, std::move(*r.witness));
        else
            report.infeasible.insert(k);
    }
    report.stats.wall_ms = timer.elapsed_ms();
    return report;
}

} // namespace fatchroma
