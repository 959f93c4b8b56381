#include "fatchroma/witness_io.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

#include "fatchroma/parse_error.hpp"

namespace fatchroma {

std::string witness_to_json(const FatWitness& w) {
    nlohmann::json j;
    j["k"] = w.k;
    j["blocks"] = w.partition.blocks;
    j["alpha"] = w.alpha.str();
    j["beta"] = w.beta.str();
    return j.dump();
}

FatWitness witness_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        FatWitness w;
        w.k = j.at("k").get<int>();
        w.partition.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
        w.alpha = Rational::parse(j.at("alpha").get<std::string>());
        w.beta = Rational::parse(j.at("beta").get<std::string>());
        if (w.k != w.partition.block_count())
            throw ParseError("witness: k does not match the number of blocks", 0);
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness: ") + e.what(), 0);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("witness: ") + e.what(), 0);
    }
}

Partition parse_coloring_file(std::string_view text, int vertex_count) {
    std::istringstream stream{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::vector<bool> seen(vertex_count, false);
    std::map<std::string, std::vector<int>> classes;
    while (std::getline(stream, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        std::istringstream fields(line);
        std::string first, label, extra;
        if (!(fields >> first))
            continue; // blank line
        long long vertex = 0;
        try {
            std::size_t used = 0;
            vertex = std::stoll(first, &used);
            if (used != first.size())
                throw std::invalid_argument(first);
        } catch (const std::exception&) {
            throw ParseError("coloring: malformed vertex '" + first + "'", lineno);
        }
        if (!(fields >> label) || (fields >> extra))
            throw ParseError("coloring: expected '<vertex> <color-label>'", lineno);
        if (vertex < 0 || vertex >= vertex_count)
            throw ParseError("coloring: vertex " + std::to_string(vertex) + " out of range [0, " +
                                 std::to_string(vertex_count) + ")",
                             lineno);
        if (seen[vertex])
            throw ParseError("coloring: vertex " + std::to_string(vertex) + " listed twice",
                             lineno);
        seen[vertex] = true;
        classes[label].push_back(static_cast<int>(vertex));
    }
    for (int v = 0; v < vertex_count; ++v)
        if (!seen[v])
            throw ParseError("coloring: vertex " + std::to_string(v) + " has no color", lineno);
    std::vector<std::vector<int>> blocks;
    blocks.reserve(classes.size());
    for (auto& [label, members] : classes)
        blocks.push_back(std::move(members));
    return Partition::canonical(std::move(blocks));
}

} // namespace fatchroma
