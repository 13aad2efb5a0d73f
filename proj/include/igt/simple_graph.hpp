#pragma once

#include <string>
#include <utility>
#include <vector>

namespace igt {

/// Undirected simple graph with named vertices. Input type for Γ(G), the
/// reduction gadgets and the combinatorial oracles.
class SimpleGraph {
  public:
    SimpleGraph() = default;
    /// Throws ValidationError on duplicate names, self-loops, repeated
    /// edges or out-of-range endpoints.
    SimpleGraph(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges);
    /// Vertices "1".."n".
    static SimpleGraph numbered(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string> &names() const { return names_; }
    const std::vector<std::pair<std::size_t, std::size_t>> &edges() const { return edges_; }
    std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
    const std::vector<std::size_t> &neighbours(std::size_t v) const { return adjacency_[v]; }

  private:
    std::vector<std::string> names_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

namespace graphs {
SimpleGraph complete(std::size_t n);
SimpleGraph path(std::size_t n);
SimpleGraph cycle(std::size_t n);
SimpleGraph star(std::size_t leaves);
/// Vertex-disjoint union, renumbered "1".."n": a's vertices first.
SimpleGraph disjoint_union(const SimpleGraph &a, const SimpleGraph &b);
} // namespace graphs

} // namespace igt
