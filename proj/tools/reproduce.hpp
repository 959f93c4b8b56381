#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fatchroma/graph.hpp"
#include "fatchroma/solver.hpp"

namespace fatchroma::cli {

enum class Theorem { disconnected1, disconnected2, connected, general };

std::string theorem_name(Theorem t);
Theorem theorem_from_name(std::string_view name);

/// One family instance with its known exact values. Constructors validate
/// the family's hypotheses and name the violated constraint on failure.
struct TheoremCase {
    Theorem theorem;
    std::string instance;
    std::map<std::string, int> params;
    int expected_chi = 0;
    int expected_chi_fat = 0;
    Graph graph;
};

TheoremCase disconnected1_case(int l1, int l2); // requires 1 <= L1 < L2
TheoremCase disconnected2_case(int l1, int l2); // requires 1 < L1 < L2
std::vector<TheoremCase> connected_cases(int n); // requires odd n >= 5
std::vector<TheoremCase> general_cases(int n);   // requires n >= 3

/// Default desk-scale ranges: Disconnected1 over 1 <= L1 < L2 <= lmax,
/// Disconnected2 over 1 < L1 < L2 <= lmax, Connected at the listed n values,
/// General over 3 <= n <= nmax.
struct ReproduceRanges {
    int lmax = 4;
    int nmax = 6;
    std::vector<int> connected_n = {5};
};

std::vector<TheoremCase> default_cases(std::optional<Theorem> only, const ReproduceRanges& ranges);

struct CaseResult {
    std::string status; // PASS | FAIL | TIMEOUT
    std::optional<int> computed_chi;
    std::optional<int> computed_chi_fat;
    std::optional<FatWitness> fat_witness;
    double seconds = 0.0;
};

struct ReproduceOutcome {
    std::vector<std::pair<TheoremCase, CaseResult>> rows; // in case order
    int exit_code = 0; // 0 all PASS, 1 any FAIL, 2 timeouts only
};

/// Solves every case (concurrently when opts.threads > 1; row order is the
/// case order either way) and compares against the expected values.
/// opts.timeout applies per case.
ReproduceOutcome run_reproduction(std::vector<TheoremCase> cases, const SolveOptions& opts);

} // namespace fatchroma::cli
