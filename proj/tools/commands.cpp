#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "json.hpp"

#include "fatchroma/dimacs.hpp"
#include "fatchroma/generators.hpp"
#include "fatchroma/graph6.hpp"
#include "fatchroma/parse_error.hpp"
#include "fatchroma/witness_io.hpp"

namespace fatchroma::cli {

namespace {

using nlohmann::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    const std::string text = read_input(path);
    std::vector<Graph> graphs;
    if (format == "dimacs") {
        graphs.push_back(parse_dimacs(text));
        return graphs;
    }
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        graphs.push_back(parse_graph6(line));
    }
    if (graphs.empty())
        throw std::invalid_argument("no graphs in '" + path + "'");
    return graphs;
}

std::map<std::string, long long> parse_params(const std::string& text) {
    std::map<std::string, long long> params;
    if (text.empty())
        return params;
    std::istringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("malformed parameter '" + item + "', expected k=v");
        const std::string key = item.substr(0, eq);
        try {
            std::size_t used = 0;
            const long long value = std::stoll(item.substr(eq + 1), &used);
            if (used != item.size() - eq - 1)
                throw std::invalid_argument(item);
            params[key] = value;
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed parameter value in '" + item + "'");
        }
    }
    return params;
}

json stats_json(const SearchStats& stats) {
    return json{{"nodes", stats.nodes},
                {"branches_pruned", stats.branches_pruned},
                {"wall_ms", stats.wall_ms}};
}

json bounds_json(const Bounds& b) {
    return json{{"lower", b.lower},
                {"upper", b.upper},
                {"lower_tag", b.lower_tag},
                {"upper_tag", b.upper_tag}};
}

std::string stats_line(const SearchStats& stats) {
    std::ostringstream out;
    out << "stats: nodes=" << stats.nodes << " branches_pruned=" << stats.branches_pruned
        << " wall_ms=" << std::fixed << std::setprecision(2) << stats.wall_ms;
    return out.str();
}

int solve_one(const Graph& g, const SolveCmdOptions& opts, const GlobalOptions& global,
              std::ostream& out) {
    const SolveOptions sopts = solve_options(global);

    if (opts.what == "bounds") {
        const Bounds b = chi_fat_upper_bound(g);
        if (global.json)
            out << json{{"what", "bounds"}, {"bounds", bounds_json(b)}}.dump() << "\n";
        else
            out << "bounds: lower=" << b.lower << " (" << b.lower_tag << ") upper=" << b.upper
                << " (" << b.upper_tag << ")\n";
        return kExitOk;
    }

    if (opts.what == "spectrum") {
        const auto report = fat_spectrum(g, sopts, opts.spectrum_cap);
        if (report.status == SolveStatus::timeout) {
            const Bounds b = chi_fat_upper_bound(g);
            if (global.json)
                out << json{{"what", "spectrum"},
                            {"status", "timeout"},
                            {"bounds", bounds_json(b)},
                            {"stats", stats_json(report.stats)}}
                           .dump()
                    << "\n";
            else
                out << "spectrum: timeout; bounds lower=" << b.lower << " upper=" << b.upper
                    << "\n";
            return kExitTimeout;
        }
        if (global.json) {
            json feasible = json::object();
            for (const auto& [k, witness] : report.feasible)
                feasible[std::to_string(k)] = json::parse(witness_to_json(witness));
            out << json{{"what", "spectrum"},
                        {"status", "solved"},
                        {"feasible", feasible},
                        {"infeasible", report.infeasible},
                        {"stats", stats_json(report.stats)}}
                       .dump()
                << "\n";
        } else {
            out << "spectrum:";
            for (const auto& [k, witness] : report.feasible)
                out << " " << k;
            out << "\n";
            for (const auto& [k, witness] : report.feasible)
                out << "  k=" << k << " " << witness_to_json(witness) << "\n";
            out << stats_line(report.stats) << "\n";
        }
        return kExitOk;
    }

    const bool fat = opts.what == "chifat";
    const SolveReport report = fat ? chi_fat(g, sopts) : chromatic_number(g, sopts);
    if (report.status == SolveStatus::timeout) {
        if (global.json)
            out << json{{"what", opts.what},
                        {"status", "timeout"},
                        {"bounds", bounds_json(report.bounds)},
                        {"stats", stats_json(report.stats)}}
                       .dump()
                << "\n";
        else
            out << opts.what << ": timeout; bounds lower=" << report.bounds.lower
                << " upper=" << report.bounds.upper << "\n";
        return kExitTimeout;
    }
    if (global.json) {
        json j{{"what", opts.what},
               {"status", "solved"},
               {"value", *report.value},
               {"bounds", bounds_json(report.bounds)},
               {"stats", stats_json(report.stats)}};
        if (report.fat_witness)
            j["witness"] = json::parse(witness_to_json(*report.fat_witness));
        if (report.coloring)
            j["coloring"] = *report.coloring;
        out << j.dump() << "\n";
    } else {
        out << opts.what << " = " << *report.value << "\n";
        if (report.fat_witness)
            out << "witness: " << witness_to_json(*report.fat_witness) << "\n";
        if (report.coloring) {
            out << "coloring:";
            for (int c : *report.coloring)
                out << " " << c;
            out << "\n";
        }
        out << stats_line(report.stats) << "\n";
    }
    return kExitOk;
}

} // namespace

SolveOptions solve_options(const GlobalOptions& g) {
    SolveOptions opts;
    opts.threads = std::max(1, g.threads);
    opts.deterministic = g.deterministic;
    if (g.timeout_seconds > 0)
        opts.timeout = std::chrono::milliseconds(
            static_cast<long long>(std::ceil(g.timeout_seconds * 1000.0)));
    return opts;
}

int cmd_generate(const GenerateOptions& opts, const GlobalOptions& global, std::ostream& out,
                 std::ostream& err) {
    try {
        FamilySpec spec{family_from_name(opts.family), parse_params(opts.params)};
        const Graph g = build_family(spec);
        const std::string text =
            global.format == "dimacs" ? emit_dimacs(g) : emit_graph6(g) + "\n";
        if (opts.out_path.empty()) {
            out << text;
        } else {
            std::ofstream file(opts.out_path, std::ios::binary);
            if (!file)
                throw std::invalid_argument("cannot write '" + opts.out_path + "'");
            file << text;
        }
        return kExitOk;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_solve(const SolveCmdOptions& opts, const GlobalOptions& global, std::ostream& out,
              std::ostream& err) {
    try {
        const auto graphs = read_graphs(opts.in_path, global.format);
        int exit_code = kExitOk;
        for (const auto& g : graphs)
            exit_code = std::max(exit_code, solve_one(g, opts, global, out));
        return exit_code;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

int cmd_verify(const VerifyOptions& opts, const GlobalOptions& global, std::ostream& out,
               std::ostream& err) {
    Graph g;
    Partition p;
    std::optional<Rational> alpha, beta;
    try {
        const auto graphs = read_graphs(opts.in_path, global.format);
        if (graphs.size() != 1)
            throw std::invalid_argument("verify expects exactly one graph");
        g = graphs.front();
        p = parse_coloring_file(read_input(opts.coloring_path), g.vertex_count());
        if (opts.alpha.has_value() != opts.beta.has_value())
            throw std::invalid_argument("give both --alpha and --beta, or neither");
        if (opts.alpha) {
            alpha = Rational::parse(*opts.alpha);
            beta = Rational::parse(*opts.beta);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    std::optional<FatRejection> rejection;
    std::optional<FatWitness> witness;
    if (alpha) {
        rejection = verify_fat(g, p, *alpha, *beta);
        if (!rejection)
            witness = FatWitness{p.block_count(), Partition::canonical(p.blocks), *alpha, *beta};
    } else {
        auto outcome = infer_fat_parameters(g, p);
        if (accepted(outcome))
            witness = std::get<FatWitness>(std::move(outcome));
        else
            rejection = std::get<FatRejection>(std::move(outcome));
    }

    if (witness) {
        if (global.json)
            out << json{{"result", "accept"},
                        {"witness", json::parse(witness_to_json(*witness))}}
                       .dump()
                << "\n";
        else
            out << "accept " << witness_to_json(*witness) << "\n";
        return kExitOk;
    }
    if (global.json)
        out << json{{"result", "reject"},
                    {"vertex", rejection->vertex},
                    {"block", rejection->block},
                    {"observed", rejection->observed.str()},
                    {"required", rejection->required.str()},
                    {"detail", rejection->detail}}
                   .dump()
            << "\n";
    else
        out << "reject: " << rejection->detail << "\n";
    return kExitReject;
}

int cmd_reproduce(const ReproduceOptions& opts, const GlobalOptions& global, std::ostream& out,
                  std::ostream& err) {
    std::vector<TheoremCase> cases;
    try {
        std::optional<Theorem> only;
        if (opts.theorem)
            only = theorem_from_name(*opts.theorem);
        ReproduceRanges ranges;
        ranges.lmax = opts.lmax;
        ranges.nmax = opts.nmax;
        ranges.connected_n = opts.connected_n;
        cases = default_cases(only, ranges);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    const auto outcome = run_reproduction(std::move(cases), solve_options(global));

    if (global.json) {
        json rows = json::array();
        for (const auto& [c, r] : outcome.rows) {
            json row{{"theorem", theorem_name(c.theorem)},
                     {"instance", c.instance},
                     {"params", c.params},
                     {"expected", {{"chi", c.expected_chi}, {"chi_fat", c.expected_chi_fat}}},
                     {"status", r.status},
                     {"seconds", r.seconds}};
            if (r.computed_chi)
                row["computed"] = {{"chi", *r.computed_chi}, {"chi_fat", *r.computed_chi_fat}};
            rows.push_back(std::move(row));
        }
        out << rows.dump() << "\n";
    } else {
        std::size_t width = 8;
        for (const auto& [c, r] : outcome.rows)
            width = std::max(width, c.instance.size());
        out << std::left << std::setw(15) << "theorem" << std::setw(static_cast<int>(width + 2))
            << "instance" << std::setw(18) << "expected" << std::setw(18) << "computed"
            << std::setw(9) << "status" << "time_s\n";
        for (const auto& [c, r] : outcome.rows) {
            std::ostringstream expected, computed;
            expected << "chi=" << c.expected_chi << " fat=" << c.expected_chi_fat;
            if (r.computed_chi)
                computed << "chi=" << *r.computed_chi << " fat=" << *r.computed_chi_fat;
            else
                computed << "-";
            out << std::left << std::setw(15) << theorem_name(c.theorem)
                << std::setw(static_cast<int>(width + 2)) << c.instance << std::setw(18)
                << expected.str() << std::setw(18) << computed.str() << std::setw(9) << r.status
                << std::fixed << std::setprecision(2) << r.seconds << "\n";
        }
    }
    return outcome.exit_code;
}

} // namespace fatchroma::cli
