#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fatchroma/fat.hpp"
#include "fatchroma/graph.hpp"
#include "fatchroma/rational.hpp"

namespace fatchroma {

struct SearchStats {
    std::uint64_t nodes = 0;           // assignments tried across all searches
    std::uint64_t branches_pruned = 0; // (k, alpha) branches closed without a witness
    double wall_ms = 0.0;

    void absorb(const SearchStats& other) {
        nodes += other.nodes;
        branches_pruned += other.branches_pruned;
        wall_ms += other.wall_ms;
    }
};

struct SolveOptions {
    int threads = 1;
    bool deterministic = false;
    std::chrono::milliseconds timeout{0}; // 0 = unlimited
};

/// lower <= chi_fat(G) <= upper, with a tag naming the argument behind each
/// side (see chi_fat_upper_bound for the derivation).
struct Bounds {
    int lower = 0;
    int upper = 0;
    std::string lower_tag;
    std::string upper_tag;
};

enum class SolveStatus { solved, timeout };

/// Result of an exact solve. On timeout only `bounds` and `stats` are
/// meaningful and the value/witness fields are absent.
struct SolveReport {
    SolveStatus status = SolveStatus::solved;
    std::optional<int> value;
    std::optional<FatWitness> fat_witness;     // set by chi_fat when solved
    std::optional<std::vector<int>> coloring;  // set by chromatic_number when solved
    Bounds bounds;
    SearchStats stats;
};

struct KFeasibility {
    enum class Status { feasible, infeasible, timeout };
    Status status = Status::infeasible;
    std::optional<FatWitness> witness;
    SearchStats stats;
};

/// Feasibility of every block count in [1, |V|].
struct SpectrumReport {
    SolveStatus status = SolveStatus::solved;
    std::map<int, FatWitness> feasible;
    std::set<int> infeasible;
    SearchStats stats;
};

class SpectrumCapExceeded : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// The complete candidate list for the off-class ratio of a FAT k-coloring
/// of g: every rational in [0, 1/(k-1)] whose lowest-terms denominator
/// divides the gcd of the positive degrees, sorted ascending. Any FAT
/// k-coloring of g uses one of these (alpha * deg(v) must be an integer for
/// every positive-degree vertex, and beta = 1 - (k-1)*alpha must stay
/// nonnegative). Requires k >= 2 and at least one edge.
std::vector<Rational> candidate_alphas(const Graph& g, int k);

/// Complete decision of "does g admit a FAT k-coloring". k = 1 is always
/// feasible; the alpha = 0 case reduces to grouping connected components
/// into k nonempty blocks; every positive alpha candidate is settled by an
/// exhaustive backtracking search with restricted-growth symmetry breaking.
KFeasibility fat_k_feasible(const Graph& g, int k, const SolveOptions& opts = {});

/// chi_fat(G): the largest k admitting a FAT k-coloring. Descends from
/// chi_fat_upper_bound and returns at the first feasible k.
SolveReport chi_fat(const Graph& g, const SolveOptions& opts = {});

/// Decides every k in [1, |V|] independently. Refuses graphs larger than
/// `cap` vertices (throws SpectrumCapExceeded); use chi_fat instead.
SpectrumReport fat_spectrum(const Graph& g, const SolveOptions& opts = {}, int cap = 32);

/// Sound bounds on chi_fat(G).
///
/// Upper bound: in a FAT k-coloring either alpha = 0 or alpha > 0. If
/// alpha = 0 then beta = 1, so each vertex keeps all its neighbors in its
/// own block; blocks are unions of components and k <= c. If alpha > 0,
/// every positive-degree vertex v has e(v, B) = alpha*deg(v) >= 1 neighbors
/// in each of the k-1 blocks not containing it, so k - 1 <= deg(v) for every
/// such v and k <= min-positive-degree + 1. Hence
/// chi_fat(G) <= max(c, min-positive-degree + 1), and <= |V| when G has no
/// edges (every partition into nonempty blocks is then FAT).
///
/// Lower bound: the component coloring is always a FAT c-coloring, so
/// chi_fat(G) >= c.
Bounds chi_fat_upper_bound(const Graph& g);

/// Exact chromatic number: greedy clique lower bound, greedy upper bound,
/// then branch and bound with saturation-degree vertex selection.
SolveReport chromatic_number(const Graph& g, const SolveOptions& opts = {});

/// Ground-truth oracle for chi_fat: enumerates every set partition of V(g)
/// by restricted growth strings, runs infer_fat_parameters on each, and
/// returns the largest accepted block count. No pruning. Requires |V| <= 12.
int brute_force_chi_fat(const Graph& g);

/// Ground-truth oracle for the chromatic number: smallest k for which an
/// exhaustive search finds a proper assignment V -> [k]. Requires |V| <= 10.
int brute_force_chromatic(const Graph& g);

} // namespace fatchroma
