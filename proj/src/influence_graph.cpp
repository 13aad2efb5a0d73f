#include "igt/influence_graph.hpp"

#include "igt/errors.hpp"

#include <algorithm>

namespace igt {

std::optional<NodeIndex> InfluenceGraph::find(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

NodeIndex InfluenceGraph::index_of(std::string_view id) const {
    if (auto v = find(id))
        return *v;
    throw InputError("unknown node id '" + std::string(id) + "'");
}

bool InfluenceGraph::unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge &e) { return e.weight == 1; });
}

NodeSet InfluenceGraph::make_set(std::span<const std::string> ids) const {
    NodeSet s(node_count());
    for (const auto &id : ids)
        s.insert(index_of(id));
    return s;
}

std::vector<std::string> InfluenceGraph::names(const NodeSet &s) const {
    std::vector<std::string> out;
    for (auto v : s.indices())
        out.push_back(ids_[v]);
    std::sort(out.begin(), out.end());
    return out;
}

NodeIndex InfluenceGraph::Builder::add_node(std::string id, std::int64_t threshold) {
    if (threshold < 0)
        throw ValidationError("node '" + id + "': threshold must be non-negative");
    if (graph_.index_.count(id))
        throw ValidationError("duplicate node id '" + id + "'");
    auto v = static_cast<NodeIndex>(graph_.ids_.size());
    graph_.index_.emplace(id, v);
    graph_.ids_.push_back(std::move(id));
    graph_.thresholds_.push_back(threshold);
    return v;
}

void InfluenceGraph::Builder::add_edge(std::string_view from, std::string_view to, std::int64_t weight) {
    auto f = graph_.find(from);
    auto t = graph_.find(to);
    if (!f)
        throw ValidationError("edge references undeclared node '" + std::string(from) + "'");
    if (!t)
        throw ValidationError("edge references undeclared node '" + std::string(to) + "'");
    add_edge(*f, *t, weight);
}

void InfluenceGraph::Builder::add_edge(NodeIndex from, NodeIndex to, std::int64_t weight) {
    const auto n = graph_.ids_.size();
    if (from >= n || to >= n)
        throw ValidationError("edge references undeclared node index");
    if (from == to)
        throw ValidationError("self-loop forbidden at node '" + graph_.ids_[from] + "'");
    if (weight < 1)
        throw ValidationError("edge " + graph_.ids_[from] + "->" + graph_.ids_[to] + ": weight must be >= 1");
    NodeIndex a = from, b = to;
    if (!graph_.directed_ && a > b)
        std::swap(a, b);
    const std::uint64_t key = (std::uint64_t{a} << 32) | b;
    if (!pairs_.emplace(key, true).second)
        throw ValidationError("parallel edge " + graph_.ids_[from] + "->" + graph_.ids_[to] + " forbidden");
    graph_.edges_.push_back({from, to, weight});
}

InfluenceGraph InfluenceGraph::Builder::build() && {
    InfluenceGraph g = std::move(graph_);
    const auto n = g.ids_.size();
    std::vector<std::vector<Arc>> out(n);
    g.in_degree_.assign(n, 0);
    for (const auto &e : g.edges_) {
        out[e.from].push_back({e.to, e.weight});
        ++g.in_degree_[e.to];
        if (!g.directed_) {
            out[e.to].push_back({e.from, e.weight});
            ++g.in_degree_[e.from];
        }
    }
    g.offsets_.assign(1, 0);
    g.arcs_.clear();
    for (auto &list : out) {
        g.arcs_.insert(g.arcs_.end(), list.begin(), list.end());
        g.offsets_.push_back(g.arcs_.size());
    }
    g.zero_threshold_.clear();
    for (NodeIndex v = 0; v < n; ++v)
        if (g.thresholds_[v] == 0)
            g.zero_threshold_.push_back(v);
    return g;
}

} // namespace igt
