#include "fatchroma/dimacs.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "fatchroma/parse_error.hpp"

namespace fatchroma {

Graph parse_dimacs(std::string_view text) {
    std::istringstream stream{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    bool have_problem = false;
    long long n = 0;
    std::vector<std::pair<int, int>> edges;

    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::string kind;
        if (!(fields >> kind))
            continue; // blank line
        if (kind == "c")
            continue;
        if (kind == "p") {
            if (have_problem)
                throw ParseError("dimacs: duplicate p-line", lineno);
            std::string format;
            long long m = 0;
            if (!(fields >> format >> n >> m) || format != "edge" || n < 0 || m < 0)
                throw ParseError("dimacs: malformed problem line, expected 'p edge <n> <m>'", lineno);
            have_problem = true;
            continue;
        }
        if (kind == "e") {
            if (!have_problem)
                throw ParseError("dimacs: edge line before p-line", lineno);
            long long u = 0, v = 0;
            if (!(fields >> u >> v))
                throw ParseError("dimacs: malformed edge line", lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError("dimacs: endpoint out of range [1, " + std::to_string(n) + "]",
                                 lineno);
            if (u == v)
                throw ParseError("dimacs: self-loop at vertex " + std::to_string(u), lineno);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError("dimacs: unknown line type '" + kind + "'", lineno);
    }
    if (!have_problem)
        throw ParseError("dimacs: missing p-line", lineno);
    return Graph(static_cast<int>(n), edges);
}

std::string emit_dimacs(const Graph& g) {
    std::string out = "c generated by fatchroma\n";
    out += "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) +
           "\n";
    for (const auto& [u, v] : g.edges())
        out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

} // namespace fatchroma
