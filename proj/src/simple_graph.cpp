#include "igt/simple_graph.hpp"

#include "igt/errors.hpp"

#include <set>
#include <unordered_set>

namespace igt {

SimpleGraph::SimpleGraph(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : names_(std::move(names)), edges_(std::move(edges)), adjacency_(names_.size()) {
    std::unordered_set<std::string> seen;
    for (const auto &n : names_)
        if (!seen.insert(n).second)
            throw ValidationError("duplicate vertex '" + n + "'");
    std::set<std::pair<std::size_t, std::size_t>> pairs;
    for (auto &[u, v] : edges_) {
        if (u >= names_.size() || v >= names_.size())
            throw ValidationError("edge endpoint out of range");
        if (u == v)
            throw ValidationError("self-loop forbidden at vertex '" + names_[u] + "'");
        if (!pairs.emplace(std::min(u, v), std::max(u, v)).second)
            throw ValidationError("repeated edge " + names_[u] + "-" + names_[v]);
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
}

SimpleGraph SimpleGraph::numbered(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(std::to_string(i));
    return SimpleGraph(std::move(names), std::move(edges));
}

namespace graphs {

SimpleGraph complete(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            e.emplace_back(i, j);
    return SimpleGraph::numbered(n, std::move(e));
}

SimpleGraph path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < n; ++i)
        e.emplace_back(i, i + 1);
    return SimpleGraph::numbered(n, std::move(e));
}

SimpleGraph cycle(std::size_t n) {
    auto e = path(n).edges();
    if (n >= 3)
        e.emplace_back(n - 1, 0);
    return SimpleGraph::numbered(n, std::move(e));
}

SimpleGraph star(std::size_t leaves) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 1; i <= leaves; ++i)
        e.emplace_back(0, i);
    return SimpleGraph::numbered(leaves + 1, std::move(e));
}

SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b) {
    auto e = a.edges();
    const auto off = a.vertex_count();
    for (auto [u, v] : b.edges())
        e.emplace_back(u + off, v + off);
    return SimpleGraph::numbered(a.vertex_count() + b.vertex_count(), std::move(e));
}

} // namespace graphs

} // namespace igt
