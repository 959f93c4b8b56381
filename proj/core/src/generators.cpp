#include "fatchroma/generators.hpp"

#include <stdexcept>
#include <utility>

namespace fatchroma {

namespace {

void require(bool condition, const std::string& constraint) {
    if (!condition)
        throw std::invalid_argument("generator: requires " + constraint);
}

void add_clique(std::vector<std::pair<int, int>>& edges, int first, int size) {
    for (int i = first; i < first + size; ++i)
        for (int j = i + 1; j < first + size; ++j)
            edges.emplace_back(i, j);
}

} // namespace

Graph edgeless(int n) {
    require(n >= 1, "n >= 1");
    return Graph(n);
}

Graph disjoint_cliques(int count, int size) {
    require(count >= 1, "count >= 1");
    require(size >= 1, "size >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < count; ++c)
        add_clique(edges, c * size, size);
    return Graph(count * size, edges);
}

Graph cliques_mixed(int l1, int l2) {
    require(l1 > 1, "L1 > 1");
    require(l2 > l1, "L2 > L1");
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < l1 - 1; ++c)
        add_clique(edges, c * l1, l1);
    add_clique(edges, (l1 - 1) * l1, l2);
    return Graph((l1 - 1) * l1 + l2, edges);
}

Graph crown(int n) {
    require(n >= 2, "n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                edges.emplace_back(i, n + j);
    return Graph(2 * n, edges);
}

Graph pendant_triangles(int n) {
    require(n >= 3, "n >= 3");
    require(n % 2 == 1, "odd n");
    const int half = (n - 1) / 2;
    std::vector<std::pair<int, int>> edges;
    add_clique(edges, 0, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < half; ++j) {
            const int u = n + i * (n - 1) + 2 * j;
            const int v = u + 1;
            edges.emplace_back(i, u);
            edges.emplace_back(i, v);
            edges.emplace_back(u, v);
        }
    }
    return Graph(n * n, edges);
}

Graph clique_with_pendant(int n) {
    require(n >= 3, "n >= 3");
    std::vector<std::pair<int, int>> edges;
    add_clique(edges, 0, n);
    edges.emplace_back(0, n);
    return Graph(n + 1, edges);
}

namespace {

struct FamilyInfo {
    Family family;
    const char* name;
    std::vector<std::string> params;
};

const std::vector<FamilyInfo>& family_table() {
    static const std::vector<FamilyInfo> table = {
        {Family::edgeless, "edgeless", {"n"}},
        {Family::disjoint_cliques, "disjoint_cliques", {"count", "size"}},
        {Family::cliques_mixed, "cliques_mixed", {"L1", "L2"}},
        {Family::crown, "crown", {"n"}},
        {Family::pendant_triangles, "pendant_triangles", {"n"}},
        {Family::clique_with_pendant, "clique_with_pendant", {"n"}},
    };
    return table;
}

const FamilyInfo& info_for(Family family) {
    for (const auto& info : family_table())
        if (info.family == family)
            return info;
    throw std::invalid_argument("generator: unknown family");
}

} // namespace

Family family_from_name(std::string_view name) {
    for (const auto& info : family_table())
        if (name == info.name)
            return info.family;
    throw std::invalid_argument("generator: unknown family '" + std::string(name) + "'");
}

std::string family_name(Family family) { return info_for(family).name; }

std::vector<std::string> family_param_names(Family family) { return info_for(family).params; }

std::vector<Family> all_families() {
    std::vector<Family> out;
    for (const auto& info : family_table())
        out.push_back(info.family);
    return out;
}

Graph build_family(const FamilySpec& spec) {
    const auto& info = info_for(spec.family);
    for (const auto& [key, value] : spec.params) {
        bool known = false;
        for (const auto& name : info.params)
            known = known || name == key;
        if (!known)
            throw std::invalid_argument("generator: family '" + std::string(info.name) +
                                        "' has no parameter '" + key + "'");
        (void)value;
    }
    auto get = [&spec, &info](const std::string& key) -> int {
        const auto it = spec.params.find(key);
        if (it == spec.params.end())
            throw std::invalid_argument("generator: family '" + std::string(info.name) +
                                        "' needs parameter '" + key + "'");
        return static_cast<int>(it->second);
    };
    switch (spec.family) {
    case Family::edgeless:
        return edgeless(get("n"));
    case Family::disjoint_cliques:
        return disjoint_cliques(get("count"), get("size"));
    case Family::cliques_mixed:
        return cliques_mixed(get("L1"), get("L2"));
    case Family::crown:
        return crown(get("n"));
    case Family::pendant_triangles:
        return pendant_triangles(get("n"));
    case Family::clique_with_pendant:
        return clique_with_pendant(get("n"));
    }
    throw std::invalid_argument("generator: unknown family");
}

} // namespace fatchroma
