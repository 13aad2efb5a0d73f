#pragma once

// Random instance generators and definition-level oracles for the tests.
// The oracles only read the graph through ids(), thresholds() and edges(),
// never through the engine's adjacency or spread code.

#include "igt/analysis.hpp"
#include "igt/game_forms.hpp"
#include "igt/influence_game.hpp"
#include "igt/simple_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace support {

using Rng = std::mt19937_64;
using igt::PlayerMask;

inline std::size_t uniform(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

// ---- definition-level oracles ----

/// Rounds F_{i+1} = F_i ∪ {v : in-weight from F_i >= f(v)} until nothing changes.
inline std::vector<bool> naive_spread(const igt::InfluenceGraph &g, const std::vector<bool> &seeds) {
    const auto n = g.node_count();
    std::vector<bool> cur = seeds;
    for (;;) {
        std::vector<std::int64_t> in(n, 0);
        for (const auto &e : g.edges()) {
            if (cur[e.from])
                in[e.to] += e.weight;
            if (!g.directed() && cur[e.to])
                in[e.from] += e.weight;
        }
        std::vector<bool> next = cur;
        for (std::size_t v = 0; v < n; ++v)
            if (in[v] >= g.thresholds()[v])
                next[v] = true;
        if (next == cur)
            return cur;
        cur = std::move(next);
    }
}

inline std::vector<bool> team_flags(const igt::InfluenceGame &game, PlayerMask team) {
    std::vector<bool> flags(game.graph().node_count(), false);
    for (std::size_t i = 0; i < game.player_count(); ++i)
        if ((team >> i) & 1U)
            flags[game.players()[i]] = true;
    return flags;
}

inline std::size_t naive_spread_size(const igt::InfluenceGame &game, PlayerMask team) {
    const auto f = naive_spread(game.graph(), team_flags(game, team));
    return static_cast<std::size_t>(std::count(f.begin(), f.end(), true));
}

inline bool naive_wins(const igt::InfluenceGame &game, PlayerMask team) {
    return static_cast<std::int64_t>(naive_spread_size(game, team)) >= game.quota();
}

inline std::vector<bool> naive_table(const igt::InfluenceGame &game) {
    const PlayerMask total = PlayerMask{1} << game.player_count();
    std::vector<bool> t(total);
    for (PlayerMask m = 0; m < total; ++m)
        t[m] = naive_wins(game, m);
    return t;
}

/// A winning-coalition table for an arbitrary predicate over n players.
template <typename Pred> std::vector<bool> table_of(std::size_t n, Pred &&wins) {
    const PlayerMask total = PlayerMask{1} << n;
    std::vector<bool> t(total);
    for (PlayerMask m = 0; m < total; ++m)
        t[m] = wins(m);
    return t;
}

inline std::set<PlayerMask> minimal_members(const std::vector<bool> &table) {
    std::set<PlayerMask> out;
    for (PlayerMask m = 0; m < table.size(); ++m) {
        if (!table[m])
            continue;
        bool minimal = true;
        for (PlayerMask b = m; b && minimal; b &= b - 1)
            if (table[m & ~(b & -b)])
                minimal = false;
        if (minimal)
            out.insert(m);
    }
    return out;
}

inline std::set<PlayerMask> maximal_losers(const std::vector<bool> &table, std::size_t n) {
    std::set<PlayerMask> out;
    for (PlayerMask m = 0; m < table.size(); ++m) {
        if (table[m])
            continue;
        bool maximal = true;
        for (std::size_t i = 0; i < n && maximal; ++i)
            if (!((m >> i) & 1U) && !table[m | (PlayerMask{1} << i)])
                maximal = false;
        if (maximal)
            out.insert(m);
    }
    return out;
}

/// Measures straight from the definitions; -1 stands for "undefined".
struct NaiveMeasures {
    std::int64_t length = -1, width = -1, slength = -1, swidth = -1;
};

inline NaiveMeasures naive_measures(const std::vector<bool> &table, std::size_t n) {
    NaiveMeasures r;
    std::int64_t min_win = -1, max_lose = -1;
    for (PlayerMask m = 0; m < table.size(); ++m) {
        const std::int64_t s = std::popcount(m);
        if (table[m] && (min_win < 0 || s < min_win))
            min_win = s;
        if (!table[m] && s > max_lose)
            max_lose = s;
    }
    r.length = min_win;
    r.width = max_lose;
    // sLength: least k with every k-coalition winning; sWidth: greatest k
    // with every k-coalition losing.
    for (std::size_t k = 0; k <= n; ++k) {
        bool all_win = true, all_lose = true;
        for (PlayerMask m = 0; m < table.size(); ++m) {
            if (static_cast<std::size_t>(std::popcount(m)) != k)
                continue;
            all_win = all_win && table[m];
            all_lose = all_lose && !table[m];
        }
        if (all_win && r.slength < 0)
            r.slength = static_cast<std::int64_t>(k);
        if (all_lose)
            r.swidth = static_cast<std::int64_t>(k);
    }
    return r;
}

inline std::optional<std::int64_t> as_optional(std::int64_t v) {
    return v < 0 ? std::nullopt : std::optional<std::int64_t>(v);
}

/// Banzhaf value: number of coalitions S ∌ i with S losing and S ∪ {i} winning.
inline igt::BigInt naive_banzhaf(const std::vector<bool> &table, std::size_t n, std::size_t i) {
    igt::BigInt c = 0;
    const PlayerMask bit = PlayerMask{1} << i;
    for (PlayerMask m = 0; m < (PlayerMask{1} << n); ++m)
        if (!(m & bit) && !table[m] && table[m | bit])
            ++c;
    return c;
}

/// Shapley-Shubik value: number of orderings in which i is pivotal.
inline igt::BigInt naive_shapley(const std::vector<bool> &table, std::size_t n, std::size_t i) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    igt::BigInt c = 0;
    do {
        PlayerMask before = 0;
        for (auto p : order) {
            if (p == i) {
                if (!table[before] && table[before | (PlayerMask{1} << i)])
                    ++c;
                break;
            }
            before |= PlayerMask{1} << p;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return c;
}

inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

inline bool naive_is_cover(const igt::SimpleGraph &g, PlayerMask vs) {
    for (auto [u, v] : g.edges())
        if (!((vs >> u) & 1U) && !((vs >> v) & 1U))
            return false;
    return true;
}

// ---- generators ----

/// Random influence game on `n` nodes. Thresholds in [0, max_threshold],
/// arc weights in [1, max_weight]; each node is a player with probability
/// `player_p` (at least one player is kept).
struct GameShape {
    std::size_t n = 5;
    bool directed = true;
    double edge_p = 0.4;
    std::int64_t max_weight = 1;
    std::int64_t max_threshold = 3;
    double player_p = 1.0;
};

inline igt::InfluenceGame random_game(Rng &rng, const GameShape &shape) {
    igt::InfluenceGraph::Builder b(shape.directed);
    for (std::size_t v = 0; v < shape.n; ++v)
        b.add_node("n" + std::to_string(v),
                   static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(shape.max_threshold))));
    for (std::size_t u = 0; u < shape.n; ++u)
        for (std::size_t v = 0; v < shape.n; ++v) {
            if (u == v || (!shape.directed && v < u) || !coin(rng, shape.edge_p))
                continue;
            b.add_edge(static_cast<igt::NodeIndex>(u), static_cast<igt::NodeIndex>(v),
                       static_cast<std::int64_t>(uniform(rng, 1, static_cast<std::size_t>(shape.max_weight))));
        }
    std::vector<std::string> players;
    for (std::size_t v = 0; v < shape.n; ++v)
        if (coin(rng, shape.player_p))
            players.push_back("n" + std::to_string(v));
    if (players.empty())
        players.push_back("n0");
    const auto q = static_cast<std::int64_t>(uniform(rng, 0, shape.n + 1));
    return igt::InfluenceGame(std::move(b).build(), q, players);
}

inline igt::SimpleGraph random_simple_graph(Rng &rng, std::size_t n, double p) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng, p))
                edges.emplace_back(u, v);
    return igt::SimpleGraph::numbered(n, edges);
}

/// Random spanning tree plus extra edges with probability p.
inline igt::SimpleGraph random_connected_graph(Rng &rng, std::size_t n, double p) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 1; v < n; ++v) {
        const auto u = uniform(rng, 0, v - 1);
        edges.emplace(u, v);
    }
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng, p))
                edges.emplace(u, v);
    return igt::SimpleGraph::numbered(n, {edges.begin(), edges.end()});
}

/// Random graph without isolated vertices: each isolated vertex is joined
/// to a random other vertex. Needs n >= 2.
inline igt::SimpleGraph random_graph_no_isolated(Rng &rng, std::size_t n, double p) {
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng, p))
                edges.emplace(u, v);
    std::vector<std::size_t> deg(n, 0);
    for (auto [u, v] : edges)
        ++deg[u], ++deg[v];
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == 0) {
            std::size_t u = uniform(rng, 0, n - 2);
            if (u >= v)
                ++u;
            edges.emplace(std::min(u, v), std::max(u, v));
            ++deg[u], ++deg[v];
        }
    return igt::SimpleGraph::numbered(n, {edges.begin(), edges.end()});
}

/// Game on an undirected unweighted graph with the given thresholds rule.
enum class Family { Max, Min };

inline igt::InfluenceGame family_game(const igt::SimpleGraph &g, Family fam, std::int64_t quota,
                                      const std::vector<std::string> &players) {
    igt::InfluenceGraph::Builder b(false);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        b.add_node(g.names()[v], fam == Family::Max ? static_cast<std::int64_t>(g.degree(v)) : 1);
    for (auto [u, v] : g.edges())
        b.add_edge(static_cast<igt::NodeIndex>(u), static_cast<igt::NodeIndex>(v));
    return igt::InfluenceGame(std::move(b).build(), quota, players);
}

/// Random monotone game given by an antichain over n players.
inline igt::ExplicitGame random_minimal_winning(Rng &rng, std::size_t n) {
    const auto count = uniform(rng, 0, 2 * n);
    std::vector<PlayerMask> family;
    for (std::size_t c = 0; c < count; ++c) {
        PlayerMask m = 0;
        const double p = std::uniform_real_distribution<double>(0.15, 0.7)(rng);
        for (std::size_t i = 0; i < n; ++i)
            if (coin(rng, p))
                m |= PlayerMask{1} << i;
        family.push_back(m);
    }
    // Keep the empty coalition rare: it makes every team win.
    if (!family.empty() && std::find(family.begin(), family.end(), 0) != family.end() && !coin(rng, 0.05))
        family.erase(std::remove(family.begin(), family.end(), PlayerMask{0}), family.end());
    return igt::normalize_minimal(igt::default_player_names(n), family);
}

inline igt::WeightedGame random_weighted(Rng &rng, std::size_t n, std::int64_t max_weight) {
    std::vector<std::int64_t> w(n);
    for (auto &x : w)
        x = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(max_weight)));
    const auto total = std::accumulate(w.begin(), w.end(), std::int64_t{0});
    const auto q = static_cast<std::int64_t>(uniform(rng, 0, static_cast<std::size_t>(total)));
    return igt::WeightedGame(q, w);
}

/// Relabels a game's player ids through `perm` (player i gets the id of
/// player perm[i]) by rebuilding the graph with renamed nodes.
inline igt::InfluenceGame relabel(const igt::InfluenceGame &game, const std::vector<std::size_t> &perm,
                                  const std::string &prefix) {
    const auto &g = game.graph();
    std::vector<std::string> names(g.node_count());
    for (std::size_t v = 0; v < g.node_count(); ++v)
        names[v] = prefix + g.id(static_cast<igt::NodeIndex>(v));
    for (std::size_t i = 0; i < game.player_count(); ++i)
        names[game.player_node(i)] = prefix + game.player_id(perm[i]);
    igt::InfluenceGraph::Builder b(g.directed());
    for (std::size_t v = 0; v < g.node_count(); ++v)
        b.add_node(names[v], g.threshold(static_cast<igt::NodeIndex>(v)));
    for (const auto &e : g.edges())
        b.add_edge(e.from, e.to, e.weight);
    std::vector<std::string> players;
    for (std::size_t i = 0; i < game.player_count(); ++i)
        players.push_back(names[game.player_node(i)]);
    return igt::InfluenceGame(std::move(b).build(), game.quota(), players);
}

/// The Fig. 1 graph with q = 3 and N = V.
inline igt::InfluenceGame example3() {
    igt::InfluenceGraph::Builder b(true);
    b.add_node("a", 1);
    b.add_node("b", 1);
    b.add_node("c", 1);
    b.add_node("d", 2);
    b.add_edge("a", "c");
    b.add_edge("a", "d");
    b.add_edge("b", "a");
    b.add_edge("b", "d");
    b.add_edge("c", "d");
    return igt::InfluenceGame::all_players(std::move(b).build(), 3);
}

} // namespace support
