#pragma once

#include "igt/influence_graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace igt {

/// Activation rounds F_0 ⊆ F_1 ⊆ ... ⊆ F_t with F_t the fixed point.
struct ActivationTrace {
    std::vector<NodeSet> steps;
    std::size_t converged_at = 0;

    const NodeSet &final_set() const { return steps.back(); }
};

/// Least fixed point of linear-threshold activation seeded with `seeds`.
/// A node activates once the weight of arcs from active nodes reaches its
/// threshold; threshold-0 nodes therefore activate even from an empty seed.
NodeSet spread(const InfluenceGraph &graph, const NodeSet &seeds);

/// Same fixed point, recorded round by round (synchronous rounds).
ActivationTrace spread_trace(const InfluenceGraph &graph, const NodeSet &seeds);

/// Reusable worklist evaluator for repeated spread queries on one graph.
/// Not thread-safe; create one per thread.
class Spreader {
  public:
    explicit Spreader(const InfluenceGraph &graph);

    /// |F(seeds)|. Stops early once `stop_at` nodes are active.
    std::size_t count(std::span<const NodeIndex> seeds, std::size_t stop_at = SIZE_MAX);
    /// Full fixed point into `out` (resized to the graph).
    void run(std::span<const NodeIndex> seeds, NodeSet &out);

  private:
    std::size_t propagate(std::span<const NodeIndex> seeds, std::size_t stop_at);
    void reset();

    const InfluenceGraph *graph_;
    std::vector<std::int64_t> acc_;
    std::vector<std::uint8_t> active_;
    std::vector<NodeIndex> touched_;
    std::vector<NodeIndex> stack_;
};

} // namespace igt
