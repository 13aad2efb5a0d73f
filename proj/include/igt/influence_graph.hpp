#pragma once

#include "igt/node_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace igt {

struct Arc {
    NodeIndex target;
    std::int64_t weight;
};

/// An edge as declared. For undirected graphs each edge appears once and
/// acts as two arcs of equal weight.
struct Edge {
    NodeIndex from;
    NodeIndex to;
    std::int64_t weight;
};

/// Node-labelled, edge-weighted graph carrying activation thresholds.
/// Immutable once built; construct through InfluenceGraph::Builder.
class InfluenceGraph {
  public:
    class Builder;

    InfluenceGraph() = default;

    std::size_t node_count() const { return ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool directed() const { return directed_; }

    const std::string &id(NodeIndex v) const { return ids_[v]; }
    const std::vector<std::string> &ids() const { return ids_; }
    std::optional<NodeIndex> find(std::string_view id) const;
    /// Throws InputError for an unknown id.
    NodeIndex index_of(std::string_view id) const;

    std::int64_t threshold(NodeIndex v) const { return thresholds_[v]; }
    const std::vector<std::int64_t> &thresholds() const { return thresholds_; }

    std::span<const Arc> out_arcs(NodeIndex v) const {
        return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
    }
    /// Number of incident edges (undirected) or in-arcs (directed).
    std::size_t degree(NodeIndex v) const { return in_degree_[v]; }

    const std::vector<Edge> &edges() const { return edges_; }

    /// True when every edge weight equals 1.
    bool unweighted() const;

    /// Nodes whose threshold is 0; they activate from the empty seed set.
    std::span<const NodeIndex> self_activating() const { return zero_threshold_; }

    NodeSet make_set(std::span<const std::string> ids) const;
    std::vector<std::string> names(const NodeSet &s) const;

  private:
    bool directed_ = true;
    std::vector<std::string> ids_;
    std::unordered_map<std::string, NodeIndex> index_;
    std::vector<std::int64_t> thresholds_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<Arc> arcs_;
    std::vector<std::size_t> in_degree_;
    std::vector<NodeIndex> zero_threshold_;
};

class InfluenceGraph::Builder {
  public:
    explicit Builder(bool directed = true) { graph_.directed_ = directed; }

    /// Throws ValidationError on a duplicate id or negative threshold.
    NodeIndex add_node(std::string id, std::int64_t threshold);
    /// Throws on unknown endpoints, self-loops, parallel edges, weight < 1.
    void add_edge(std::string_view from, std::string_view to, std::int64_t weight = 1);
    void add_edge(NodeIndex from, NodeIndex to, std::int64_t weight = 1);

    bool has_node(std::string_view id) const { return graph_.index_.count(std::string(id)) != 0; }
    std::size_t node_count() const { return graph_.ids_.size(); }

    InfluenceGraph build() &&;

  private:
    InfluenceGraph graph_;
    std::unordered_map<std::uint64_t, bool> pairs_;
};

} // namespace igt
