#include "igt/spread.hpp"

#include "igt/errors.hpp"

namespace igt {

namespace {

void check_seeds(const InfluenceGraph &graph, const NodeSet &seeds) {
    if (seeds.universe() != graph.node_count())
        throw InputError("seed set does not belong to this graph");
}

} // namespace

NodeSet spread(const InfluenceGraph &graph, const NodeSet &seeds) {
    check_seeds(graph, seeds);
    Spreader s(graph);
    NodeSet out;
    auto idx = seeds.indices();
    s.run(idx, out);
    return out;
}

ActivationTrace spread_trace(const InfluenceGraph &graph, const NodeSet &seeds) {
    check_seeds(graph, seeds);
    const auto n = graph.node_count();
    ActivationTrace trace;
    trace.steps.push_back(seeds);

    std::vector<std::int64_t> acc(n, 0);
    NodeSet current = seeds;
    std::vector<NodeIndex> frontier = seeds.indices();
    // Round 1 also considers every node: an empty in-sum meets threshold 0.
    bool first = true;
    while (true) {
        std::vector<NodeIndex> candidates;
        for (auto u : frontier)
            for (const auto &arc : graph.out_arcs(u))
                if (!current.contains(arc.target)) {
                    acc[arc.target] += arc.weight;
                    candidates.push_back(arc.target);
                }
        if (first)
            for (auto v : graph.self_activating())
                candidates.push_back(v);
        first = false;

        NodeSet next = current;
        std::vector<NodeIndex> added;
        for (auto v : candidates)
            if (!next.contains(v) && acc[v] >= graph.threshold(v)) {
                next.insert(v);
                added.push_back(v);
            }
        if (added.empty())
            break;
        trace.steps.push_back(next);
        current = std::move(next);
        frontier = std::move(added);
    }
    trace.converged_at = trace.steps.size() - 1;
    return trace;
}

Spreader::Spreader(const InfluenceGraph &graph)
    : graph_(&graph), acc_(graph.node_count(), 0), active_(graph.node_count(), 0) {
    touched_.reserve(graph.node_count());
    stack_.reserve(graph.node_count());
}

void Spreader::reset() {
    for (auto v : touched_) {
        acc_[v] = 0;
        active_[v] = 0;
    }
    touched_.clear();
    stack_.clear();
}

std::size_t Spreader::propagate(std::span<const NodeIndex> seeds, std::size_t stop_at) {
    reset();
    std::size_t active = 0;
    auto activate = [&](NodeIndex v) {
        if (active_[v] == 1)
            return;
        if (active_[v] == 0)
            touched_.push_back(v);
        active_[v] = 1;
        ++active;
        stack_.push_back(v);
    };
    for (auto v : seeds)
        activate(v);
    for (auto v : graph_->self_activating())
        activate(v);
    while (!stack_.empty() && active < stop_at) {
        NodeIndex u = stack_.back();
        stack_.pop_back();
        for (const auto &arc : graph_->out_arcs(u)) {
            const NodeIndex v = arc.target;
            if (active_[v] == 1)
                continue;
            if (active_[v] == 0) {
                active_[v] = 2; // touched, inactive
                touched_.push_back(v);
            }
            acc_[v] += arc.weight;
            if (acc_[v] >= graph_->threshold(v))
                activate(v);
        }
    }
    return active;
}

std::size_t Spreader::count(std::span<const NodeIndex> seeds, std::size_t stop_at) {
    return propagate(seeds, stop_at);
}

void Spreader::run(std::span<const NodeIndex> seeds, NodeSet &out) {
    propagate(seeds, SIZE_MAX);
    out = NodeSet(graph_->node_count());
    for (auto v : touched_)
        if (active_[v] == 1)
            out.insert(v);
}

} // namespace igt
