#include "reproduce.hpp"

#include <chrono>
#include <future>
#include <stdexcept>

#include "fatchroma/generators.hpp"

namespace fatchroma::cli {

std::string theorem_name(Theorem t) {
    switch (t) {
    case Theorem::disconnected1:
        return "Disconnected1";
    case Theorem::disconnected2:
        return "Disconnected2";
    case Theorem::connected:
        return "Connected";
    case Theorem::general:
        return "General";
    }
    return "?";
}

Theorem theorem_from_name(std::string_view name) {
    std::string lower(name);
    for (auto& c : lower)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower == "disconnected1")
        return Theorem::disconnected1;
    if (lower == "disconnected2")
        return Theorem::disconnected2;
    if (lower == "connected")
        return Theorem::connected;
    if (lower == "general")
        return Theorem::general;
    throw std::invalid_argument("unknown theorem '" + std::string(name) +
                                "' (expected disconnected1|disconnected2|connected|general)");
}

TheoremCase disconnected1_case(int l1, int l2) {
    if (!(1 <= l1 && l1 < l2))
        throw std::invalid_argument("Disconnected1 requires 1 <= L1 < L2");
    TheoremCase c;
    c.theorem = Theorem::disconnected1;
    c.instance = "disjoint_cliques(count=" + std::to_string(l2) + ",size=" + std::to_string(l1) +
                 ")";
    c.params = {{"L1", l1}, {"L2", l2}};
    c.expected_chi = l1;
    c.expected_chi_fat = l2;
    c.graph = disjoint_cliques(l2, l1);
    return c;
}

TheoremCase disconnected2_case(int l1, int l2) {
    if (!(1 < l1 && l1 < l2))
        throw std::invalid_argument("Disconnected2 requires 1 < L1 < L2");
    TheoremCase c;
    c.theorem = Theorem::disconnected2;
    c.instance = "cliques_mixed(L1=" + std::to_string(l1) + ",L2=" + std::to_string(l2) + ")";
    c.params = {{"L1", l1}, {"L2", l2}};
    c.expected_chi = l2;
    c.expected_chi_fat = l1;
    c.graph = cliques_mixed(l1, l2);
    return c;
}

std::vector<TheoremCase> connected_cases(int n) {
    if (!(n >= 5 && n % 2 == 1))
        throw std::invalid_argument("Connected requires odd n >= 5");
    TheoremCase a;
    a.theorem = Theorem::connected;
    a.instance = "crown(n=" + std::to_string(n) + ")";
    a.params = {{"n", n}};
    a.expected_chi = 2;
    a.expected_chi_fat = n;
    a.graph = crown(n);

    TheoremCase b;
    b.theorem = Theorem::connected;
    b.instance = "pendant_triangles(n=" + std::to_string(n) + ")";
    b.params = {{"n", n}};
    b.expected_chi = n;
    b.expected_chi_fat = 2;
    b.graph = pendant_triangles(n);
    return {std::move(a), std::move(b)};
}

std::vector<TheoremCase> general_cases(int n) {
    if (n < 3)
        throw std::invalid_argument("General requires n >= 3");
    TheoremCase a;
    a.theorem = Theorem::general;
    a.instance = "edgeless(n=" + std::to_string(n) + ")";
    a.params = {{"n", n}};
    a.expected_chi = 1;
    a.expected_chi_fat = n;
    a.graph = edgeless(n);

    TheoremCase b;
    b.theorem = Theorem::general;
    b.instance = "clique_with_pendant(n=" + std::to_string(n) + ")";
    b.params = {{"n", n}};
    b.expected_chi = n;
    b.expected_chi_fat = 1;
    b.graph = clique_with_pendant(n);
    return {std::move(a), std::move(b)};
}

std::vector<TheoremCase> default_cases(std::optional<Theorem> only,
                                       const ReproduceRanges& ranges) {
    std::vector<TheoremCase> cases;
    auto want = [&only](Theorem t) { return !only || *only == t; };
    if (want(Theorem::disconnected1))
        for (int l1 = 1; l1 <= ranges.lmax; ++l1)
            for (int l2 = l1 + 1; l2 <= ranges.lmax; ++l2)
                cases.push_back(disconnected1_case(l1, l2));
    if (want(Theorem::disconnected2))
        for (int l1 = 2; l1 <= ranges.lmax; ++l1)
            for (int l2 = l1 + 1; l2 <= ranges.lmax; ++l2)
                cases.push_back(disconnected2_case(l1, l2));
    if (want(Theorem::connected))
        for (int n : ranges.connected_n)
            for (auto& c : connected_cases(n))
                cases.push_back(std::move(c));
    if (want(Theorem::general))
        for (int n = 3; n <= ranges.nmax; ++n)
            for (auto& c : general_cases(n))
                cases.push_back(std::move(c));
    return cases;
}

namespace {

CaseResult run_case(const TheoremCase& c, const SolveOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    CaseResult r;
    auto chi = chromatic_number(c.graph, opts);
    auto fat = chi_fat(c.graph, opts);
    if (chi.status == SolveStatus::timeout || fat.status == SolveStatus::timeout) {
        r.status = "TIMEOUT";
    } else {
        r.computed_chi = chi.value;
        r.computed_chi_fat = fat.value;
        r.fat_witness = fat.fat_witness;
        r.status = (*chi.value == c.expected_chi && *fat.value == c.expected_chi_fat) ? "PASS"
                                                                                      : "FAIL";
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

} // namespace

ReproduceOutcome run_reproduction(std::vector<TheoremCase> cases, const SolveOptions& opts) {
    ReproduceOutcome outcome;
    std::vector<CaseResult> results(cases.size());

    if (opts.threads > 1 && cases.size() > 1) {
        SolveOptions per_case = opts;
        per_case.threads = 1;
        std::vector<std::future<CaseResult>> futures;
        futures.reserve(cases.size());
        for (const auto& c : cases)
            futures.push_back(std::async(std::launch::async,
                                         [&c, per_case] { return run_case(c, per_case); }));
        for (std::size_t i = 0; i < futures.size(); ++i)
            results[i] = futures[i].get();
    } else {
        for (std::size_t i = 0; i < cases.size(); ++i)
            results[i] = run_case(cases[i], opts);
    }

    bool any_fail = false, any_timeout = false;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        any_fail = any_fail || results[i].status == "FAIL";
        any_timeout = any_timeout || results[i].status == "TIMEOUT";
        outcome.rows.emplace_back(std::move(cases[i]), std::move(results[i]));
    }
    outcome.exit_code = any_fail ? 1 : (any_timeout ? 2 : 0);
    return outcome;
}

} // namespace fatchroma::cli
