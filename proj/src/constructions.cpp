#include "igt/constructions.hpp"

#include "igt/errors.hpp"

#include <random>
#include <unordered_map>

namespace igt {

InfluenceGame from_minimal_winning(const ExplicitGame &input) {
    const auto game = minimal_winning(input);
    const auto &family = game.family();
    const auto n = game.player_count();

    InfluenceGraph::Builder b(true);
    for (const auto &p : game.players())
        b.add_node(p, 1);

    std::int64_t quota = 0;
    if (family.empty()) {
        quota = static_cast<std::int64_t>(n) + 1; // no successful team
    } else if (family.front() == 0) {
        quota = 0; // every team successful
    } else {
        const auto slength = explicit_measure(game, MeasureKind::SLength);
        quota = *slength; // W ≠ ∅ so N wins and sLength <= n
        for (std::size_t c = 0; c < family.size(); ++c) {
            const auto coalition = family[c];
            const std::int64_t size = popcount(coalition);
            for (std::int64_t j = 1; j <= quota - size; ++j) {
                const auto id = "gadget:" + std::to_string(c + 1) + ":" + std::to_string(j);
                const auto v = b.add_node(id, size);
                for (auto i : members(coalition))
                    b.add_edge(static_cast<NodeIndex>(i), v, 1);
            }
        }
    }
    return InfluenceGame(std::move(b).build(), quota, game.players());
}

namespace {

std::vector<std::string> names_or_default(std::vector<std::string> names, std::size_t n) {
    if (names.empty())
        return default_player_names(n);
    if (names.size() != n)
        throw InputError("player name count does not match player count");
    return names;
}

} // namespace

InfluenceGame from_weighted(const WeightedGame &game, std::vector<std::string> names) {
    const auto n = game.player_count();
    names = names_or_default(std::move(names), n);
    InfluenceGraph::Builder b(true);
    for (const auto &p : names)
        b.add_node(p, 1);
    const auto centre = b.add_node("centre", game.quota);
    for (std::size_t i = 0; i < n; ++i)
        if (game.weights[i] > 0)
            b.add_edge(static_cast<NodeIndex>(i), centre, game.weights[i]);
    for (std::size_t k = 1; k <= n; ++k)
        b.add_edge(centre, b.add_node("sink:" + std::to_string(k), 1), 1);
    return InfluenceGame(std::move(b).build(), static_cast<std::int64_t>(n) + 1, names);
}

InfluenceGame from_weighted_unweighted(const WeightedGame &game, std::vector<std::string> names,
                                       const Limits &limits) {
    const auto n = game.player_count();
    names = names_or_default(std::move(names), n);
    const auto total = game.total_weight();
    if (game.quota > total)
        throw ValidationError("unweighted realisation requires quota <= w(N) (quota " + std::to_string(game.quota) +
                              ", w(N) " + std::to_string(total) + ")");
    if (total > limits.weight_budget)
        throw ResourceError("total weight " + std::to_string(total) + " exceeds the weight budget of " +
                            std::to_string(limits.weight_budget));

    InfluenceGraph::Builder b(true);
    for (const auto &p : names)
        b.add_node(p, 1);
    std::vector<NodeIndex> relays;
    for (std::size_t i = 0; i < n; ++i)
        for (std::int64_t j = 1; j <= game.weights[i]; ++j) {
            const auto r = b.add_node("relay:" + std::to_string(i + 1) + ":" + std::to_string(j), 1);
            b.add_edge(static_cast<NodeIndex>(i), r, 1);
            relays.push_back(r);
        }
    const auto centre = b.add_node("centre", game.quota);
    for (auto r : relays)
        b.add_edge(r, centre, 1);
    const auto sinks = static_cast<std::int64_t>(n) + total;
    for (std::int64_t k = 1; k <= sinks; ++k)
        b.add_edge(centre, b.add_node("sink:" + std::to_string(k), 1), 1);
    return InfluenceGame(std::move(b).build(), sinks, names);
}

namespace {

// Copies `game`'s graph as activation rounds F^0, f^1, F^1, ..., f^R, F^R
// (R = |V|) under the prefix `tag`, F^r holding exactly F_r(X) for a team
// X seeded into F^0. Returns the nodes of the last round.
std::vector<NodeIndex> unroll(InfluenceGraph::Builder &b, const InfluenceGame &game, const std::string &tag) {
    const auto &g = game.graph();
    const auto nv = g.node_count();
    auto layer = [&](const std::string &name, bool original_thresholds) {
        std::vector<NodeIndex> out(nv);
        for (NodeIndex v = 0; v < nv; ++v)
            out[v] = b.add_node(tag + ":" + name + ":" + g.id(v), original_thresholds ? g.threshold(v) : 1);
        return out;
    };
    auto prev = layer("F0", false);
    for (std::size_t r = 1; r <= nv; ++r) {
        auto inner = layer("f" + std::to_string(r), true);
        auto next = layer("F" + std::to_string(r), false);
        for (NodeIndex u = 0; u < nv; ++u)
            for (const auto &arc : g.out_arcs(u))
                b.add_edge(prev[u], inner[arc.target], arc.weight);
        for (NodeIndex v = 0; v < nv; ++v) {
            b.add_edge(prev[v], next[v], 1);
            b.add_edge(inner[v], next[v], 1);
        }
        prev = std::move(next);
    }
    return prev;
}

std::vector<NodeIndex> first_round(const InfluenceGraph::Builder &, const InfluenceGame &game, NodeIndex base) {
    // F^0 is the first layer added by unroll(), in graph node order.
    std::vector<NodeIndex> out(game.graph().node_count());
    for (NodeIndex v = 0; v < out.size(); ++v)
        out[v] = base + v;
    return out;
}

void validate_combination(const InfluenceGame &a, const InfluenceGame &b, const InfluenceGame &result,
                          CombineMode mode, const Limits &limits) {
    const auto n = a.player_count();
    std::vector<std::size_t> b_pos(n), r_pos(n);
    for (std::size_t i = 0; i < n; ++i) {
        b_pos[i] = b.position(a.player_id(i));
        r_pos[i] = result.position(a.player_id(i));
    }
    auto check = [&](const std::vector<std::size_t> &members_of_a) {
        NodeSet ta(a.graph().node_count()), tb(b.graph().node_count()), tr(result.graph().node_count());
        for (auto i : members_of_a) {
            ta.insert(a.player_node(i));
            tb.insert(b.player_node(b_pos[i]));
            tr.insert(result.player_node(r_pos[i]));
        }
        const bool wa = is_successful(a, ta), wb = is_successful(b, tb);
        const bool expected = mode == CombineMode::Union ? (wa || wb) : (wa && wb);
        if (is_successful(result, tr) != expected) {
            std::string team;
            for (auto i : members_of_a)
                team += (team.empty() ? "" : ",") + a.player_id(i);
            throw ValidationError("combined game disagrees with its inputs on team {" + team + "}");
        }
    };
    if (n <= limits.combine_validation) {
        for (PlayerMask s = 0; s <= full_mask(n); ++s) {
            std::vector<std::size_t> m;
            for (auto i : members(s))
                m.push_back(i);
            check(m);
        }
        return;
    }
    std::mt19937_64 rng(0x1f1f5eedULL);
    for (int trial = 0; trial < 256; ++trial) {
        std::vector<std::size_t> m;
        for (std::size_t i = 0; i < n; ++i)
            if (rng() & 1U)
                m.push_back(i);
        check(m);
    }
}

} // namespace

InfluenceGame combine(const InfluenceGame &a, const InfluenceGame &b, CombineMode mode, const Limits &limits) {
    const auto n_players = a.player_count();
    if (b.player_count() != n_players)
        throw InputError("combine: games must have identical player sets");
    for (std::size_t i = 0; i < n_players; ++i)
        if (!b.graph().find(a.player_id(i)) || !b.is_player(*b.graph().find(a.player_id(i))))
            throw InputError("combine: games must have identical player sets");

    const std::size_t n = std::max(a.graph().node_count(), b.graph().node_count());
    InfluenceGraph::Builder builder(true);
    for (std::size_t i = 0; i < n_players; ++i)
        builder.add_node(a.player_id(i), 1);

    std::vector<NodeIndex> q_nodes;
    int index = 1;
    for (const InfluenceGame *g : {&a, &b}) {
        const std::string tag = "g" + std::to_string(index);
        const auto base = static_cast<NodeIndex>(builder.node_count());
        const auto last = unroll(builder, *g, tag);
        const auto entry = first_round(builder, *g, base);
        for (std::size_t i = 0; i < n_players; ++i) {
            const auto v = g->graph().index_of(a.player_id(i));
            builder.add_edge(static_cast<NodeIndex>(i), entry[v], 1);
        }
        const auto q = builder.add_node("combine:q" + std::to_string(index), g->quota());
        for (auto v : last)
            builder.add_edge(v, q, 1);
        q_nodes.push_back(q);
        ++index;
    }
    const auto x = builder.add_node("combine:x", mode == CombineMode::Union ? 1 : 2);
    for (auto q : q_nodes)
        builder.add_edge(q, x, 1);
    const auto sinks = static_cast<std::int64_t>(4 * n * n + 3 * n + 2);
    for (std::int64_t k = 1; k <= sinks; ++k)
        builder.add_edge(x, builder.add_node("sink:" + std::to_string(k), 1), 1);

    InfluenceGame result(std::move(builder).build(), sinks, a.player_ids());
    validate_combination(a, b, result, mode, limits);
    return result;
}

InfluenceGame combine_weighted(const WeightedGame &a, const WeightedGame &b, CombineMode mode,
                               std::vector<std::string> names) {
    const auto n = a.player_count();
    if (b.player_count() != n)
        throw InputError("combine_weighted: games must have the same number of players");
    names = names_or_default(std::move(names), n);
    InfluenceGraph::Builder builder(true);
    for (const auto &p : names)
        builder.add_node(p, 1);
    const auto q1 = builder.add_node("quota:1", a.quota);
    const auto q2 = builder.add_node("quota:2", b.quota);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.weights[i] > 0)
            builder.add_edge(static_cast<NodeIndex>(i), q1, a.weights[i]);
        if (b.weights[i] > 0)
            builder.add_edge(static_cast<NodeIndex>(i), q2, b.weights[i]);
    }
    const auto x = builder.add_node("combine:x", mode == CombineMode::Union ? 1 : 2);
    builder.add_edge(q1, x, 1);
    builder.add_edge(q2, x, 1);
    for (std::size_t k = 1; k <= n; ++k)
        builder.add_edge(x, builder.add_node("sink:" + std::to_string(k), 1), 1);
    const auto quota = static_cast<std::int64_t>(n) + (mode == CombineMode::Union ? 2 : 3);
    return InfluenceGame(std::move(builder).build(), quota, names);
}

InfluenceGame vertex_cover_game(const SimpleGraph &graph) {
    InfluenceGraph::Builder b(false);
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        b.add_node(graph.names()[v], static_cast<std::int64_t>(graph.degree(v)));
    for (auto [u, v] : graph.edges())
        b.add_edge(static_cast<NodeIndex>(u), static_cast<NodeIndex>(v), 1);
    return InfluenceGame::all_players(std::move(b).build(), static_cast<std::int64_t>(graph.vertex_count()));
}

SimpleGraph skeleton(const InfluenceGraph &graph) {
    if (graph.directed())
        throw InputError("expected an undirected graph");
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (const auto &e : graph.edges())
        edges.emplace_back(e.from, e.to);
    return SimpleGraph(graph.ids(), std::move(edges));
}

} // namespace igt
