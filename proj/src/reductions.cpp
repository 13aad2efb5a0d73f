#include "igt/reductions.hpp"

#include "igt/analysis.hpp"
#include "igt/constructions.hpp"
#include "igt/errors.hpp"

namespace igt {

std::string describe(const SetSystem &c) {
    std::string out = "sets";
    for (const auto &s : c.sets) {
        out += " {";
        for (std::size_t i = 0; i < s.size(); ++i)
            out += (i ? "," : "") + std::to_string(s[i]);
        out += "}";
    }
    return out + " over 1.." + std::to_string(c.universe);
}

std::string describe(const SimpleGraph &g) {
    std::string out = "graph n=" + std::to_string(g.vertex_count()) + " edges";
    for (auto [u, v] : g.edges())
        out += " " + g.names()[u] + "-" + g.names()[v];
    return out;
}

namespace {

std::string show(std::optional<std::int64_t> v) { return v ? std::to_string(*v) : "none"; }

std::string show(bool b) { return b ? "true" : "false"; }

void check_set_system(const SetSystem &c) {
    if (c.universe == 0)
        throw InputError("set system needs a non-empty universe");
    for (const auto &s : c.sets)
        for (auto e : s)
            if (e < 1 || e > c.universe)
                throw InputError("set element " + std::to_string(e) + " outside the universe 1.." +
                                 std::to_string(c.universe));
}

std::string idx(const char *prefix, std::size_t i) { return std::string(prefix) + std::to_string(i); }

// Common structure of the two set-system gadgets: players y_j, elements
// t_i, sinks z_k.
InfluenceGraph::Builder set_gadget(const SetSystem &c, std::int64_t element_threshold) {
    const auto n = c.universe, m = c.sets.size();
    InfluenceGraph::Builder b(true);
    for (std::size_t j = 1; j <= m; ++j)
        b.add_node(idx("y:", j), static_cast<std::int64_t>(n) + 1);
    for (std::size_t i = 1; i <= n; ++i)
        b.add_node(idx("t:", i), element_threshold);
    for (std::size_t k = 1; k <= m + 1; ++k)
        b.add_node(idx("z:", k), 1);
    for (std::size_t j = 1; j <= m; ++j) {
        std::vector<char> seen(n + 1, 0);
        for (auto e : c.sets[j - 1])
            if (!seen[e]) {
                seen[e] = 1;
                b.add_edge(idx("y:", j), idx("t:", e));
            }
    }
    return b;
}

std::vector<std::string> y_players(std::size_t m) {
    std::vector<std::string> out;
    for (std::size_t j = 1; j <= m; ++j)
        out.push_back(idx("y:", j));
    return out;
}

std::string vertex(const SimpleGraph &g, std::size_t v) { return "v:" + g.names()[v]; }

// Δ1's vertices and the edges shared by Δ2; Δ3 builds its own.
InfluenceGraph::Builder delta1_graph(const SimpleGraph &g, std::size_t k) {
    const auto n = g.vertex_count(), m = g.edge_count();
    const auto alpha = n + m + 4;
    InfluenceGraph::Builder b(false);
    for (std::size_t v = 0; v < n; ++v)
        b.add_node(vertex(g, v), static_cast<std::int64_t>(m) + 2);
    for (std::size_t j = 1; j <= m; ++j)
        b.add_node(idx("e:", j), 1);
    b.add_node("x", static_cast<std::int64_t>(k) + 1);
    b.add_node("y", static_cast<std::int64_t>(m) + 1);
    b.add_node("z", 2);
    for (std::size_t l = 1; l <= alpha; ++l)
        b.add_node(idx("s:", l), 1);
    for (std::size_t j = 1; j <= m; ++j) {
        const auto [u, v] = g.edges()[j - 1];
        b.add_edge(idx("e:", j), vertex(g, u));
        b.add_edge(idx("e:", j), vertex(g, v));
        b.add_edge(idx("e:", j), "y");
    }
    for (std::size_t v = 0; v < n; ++v)
        b.add_edge(vertex(g, v), "x");
    for (std::size_t l = 1; l <= alpha; ++l) {
        b.add_edge("x", idx("s:", l));
        b.add_edge("y", idx("s:", l));
    }
    b.add_edge("z", "y");
    return b;
}

std::vector<std::string> vertex_players(const SimpleGraph &g) {
    std::vector<std::string> out;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        out.push_back(vertex(g, v));
    return out;
}

Provenance graph_provenance(const char *gadget, const SimpleGraph &g, std::size_t k) {
    return {gadget, describe(g), {{"k", static_cast<std::int64_t>(k)}}};
}

} // namespace

GadgetInstance gen_setcover_length_game(const SetSystem &c) {
    check_set_system(c);
    const auto n = c.universe, m = c.sets.size();
    auto b = set_gadget(c, 1);
    b.add_node("x", static_cast<std::int64_t>(n));
    for (std::size_t i = 1; i <= n; ++i)
        b.add_edge(idx("t:", i), "x");
    for (std::size_t k = 1; k <= m + 1; ++k)
        b.add_edge("x", idx("z:", k));
    const auto q = static_cast<std::int64_t>(m + n + 1);
    InfluenceGame game(std::move(b).build(), q, y_players(m));
    return {std::move(game),
            {"setcover_length", describe(c), {{"q", q}}},
            Relation::LengthIsMinSetCover,
            c,
            0};
}

GadgetInstance gen_setpacking_width_game(const SetSystem &c) {
    check_set_system(c);
    const auto n = c.universe, m = c.sets.size();
    auto b = set_gadget(c, 2);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= m + 1; ++k)
            b.add_edge(idx("t:", i), idx("z:", k));
    const auto q = static_cast<std::int64_t>(m + 1);
    InfluenceGame game(std::move(b).build(), q, y_players(m));
    return {std::move(game),
            {"setpacking_width", describe(c), {{"q", q}}},
            Relation::WidthIsMaxSetPacking,
            c,
            0};
}

GadgetInstance gen_delta1(const SimpleGraph &g, std::size_t k) {
    if (k > g.vertex_count())
        throw InputError("k must lie in 0..|V|");
    auto players = vertex_players(g);
    players.push_back("z");
    const auto q = static_cast<std::int64_t>(g.vertex_count() + g.edge_count() + 4);
    InfluenceGame game(delta1_graph(g, k).build(), q, players);
    return {std::move(game), graph_provenance("delta1", g, k), Relation::Delta1Success, g,
            static_cast<std::int64_t>(k)};
}

GadgetInstance gen_delta2(const SimpleGraph &g, std::size_t k) {
    if (k > g.vertex_count())
        throw InputError("k must lie in 0..|V|");
    auto b = delta1_graph(g, k);
    b.add_node("t", 2);
    b.add_node("s", 4);
    b.add_edge("x", "s");
    b.add_edge("y", "s");
    b.add_edge("t", "s");
    auto players = vertex_players(g);
    players.push_back("z");
    players.push_back("t");
    const auto q = static_cast<std::int64_t>(g.vertex_count() + g.edge_count() + 5);
    InfluenceGame game(std::move(b).build(), q, players);
    return {std::move(game), graph_provenance("delta2", g, k), Relation::Delta2Symmetry, g,
            static_cast<std::int64_t>(k)};
}

GadgetInstance gen_delta3(const SimpleGraph &g) {
    const auto n = g.vertex_count(), m = g.edge_count();
    if (n % 2 != 0)
        throw InputError("Δ3 requires an even number of vertices");
    const auto k = n / 2;
    const auto alpha = n + m + 4;
    InfluenceGraph::Builder b(false);
    for (std::size_t v = 0; v < n; ++v)
        b.add_node(vertex(g, v), static_cast<std::int64_t>(m) + 2);
    for (std::size_t j = 1; j <= m; ++j)
        b.add_node(idx("e:", j), 2);
    b.add_node("x", static_cast<std::int64_t>(k) + 1);
    b.add_node("y", 1);
    b.add_node("z", 1);
    b.add_node("t", 2);
    for (std::size_t l = 1; l <= alpha; ++l)
        b.add_node(idx("s:", l), 1);
    for (std::size_t j = 1; j <= m; ++j) {
        const auto [u, v] = g.edges()[j - 1];
        b.add_edge(idx("e:", j), vertex(g, u));
        b.add_edge(idx("e:", j), vertex(g, v));
        b.add_edge(idx("e:", j), "y");
    }
    for (std::size_t v = 0; v < n; ++v)
        b.add_edge(vertex(g, v), "x");
    for (std::size_t l = 1; l <= alpha; ++l) {
        b.add_edge("x", idx("s:", l));
        b.add_edge("t", idx("s:", l));
    }
    b.add_edge("z", "t");
    b.add_edge("y", "t");
    auto players = vertex_players(g);
    players.push_back("z");
    InfluenceGame game(std::move(b).build(), static_cast<std::int64_t>(n + m + 5), players);
    return {std::move(game), graph_provenance("delta3", g, k), Relation::Delta3Strong, g,
            static_cast<std::int64_t>(k)};
}

RelationCheck verify(const GadgetInstance &inst, const Limits &limits) {
    RelationCheck r;
    switch (inst.relation) {
    case Relation::LengthIsMinSetCover: {
        const auto &c = std::get<SetSystem>(inst.source);
        const auto expected = oracle::min_set_cover(c, limits);
        std::optional<std::int64_t> want;
        if (expected)
            want = static_cast<std::int64_t>(*expected);
        const auto got = measure(inst.game, MeasureKind::Length, limits);
        r.claim = "Length = min set cover = " + show(want);
        r.observed = "Length = " + show(got);
        r.holds = got == want;
        break;
    }
    case Relation::WidthIsMaxSetPacking: {
        const auto &c = std::get<SetSystem>(inst.source);
        const auto want = static_cast<std::int64_t>(oracle::max_set_packing(c, limits));
        const auto got = measure(inst.game, MeasureKind::Width, limits);
        r.claim = "Width = max set packing = " + std::to_string(want);
        r.observed = "Width = " + show(got);
        r.holds = got == want;
        break;
    }
    case Relation::Delta1Success: {
        const auto &g = std::get<SimpleGraph>(inst.source);
        const auto n = g.vertex_count();
        require_within(n + 1, limits.max_players, "Δ1 relation check");
        TeamEvaluator eval(inst.game);
        const PlayerMask z = PlayerMask{1} << n;
        std::size_t mismatches = 0;
        for (PlayerMask s = 0; s <= full_mask(n + 1); ++s) {
            const auto vs = s & ~z;
            const bool want = popcount(vs) >= inst.k + 1 || ((s & z) && oracle::is_vertex_cover(g, vs));
            if (eval.wins(s) != want)
                ++mismatches;
        }
        r.claim = "X wins iff |X∩V| >= k+1 or (z in X and X∖{z} is a vertex cover)";
        r.observed = std::to_string(mismatches) + " mismatching teams of " + std::to_string(PlayerMask{1} << (n + 1));
        r.holds = mismatches == 0;
        break;
    }
    case Relation::Delta2Symmetry: {
        const auto &g = std::get<SimpleGraph>(inst.source);
        const bool no_small_cover = static_cast<std::int64_t>(oracle::min_vertex_cover(g, limits)) > inst.k;
        const bool symmetric = are_symmetric(inst.game, "z", "t", limits);
        r.claim = "z,t symmetric iff no vertex cover of size <= k (expected " + show(no_small_cover) + ")";
        r.observed = "symmetric = " + show(symmetric);
        r.holds = symmetric == no_small_cover;
        break;
    }
    case Relation::Delta3Strong: {
        const auto &g = std::get<SimpleGraph>(inst.source);
        const bool no_large_independent = 2 * oracle::max_independent_set(g, limits) < g.vertex_count();
        const bool strong = game_property(inst.game, GameProperty::Strong, limits);
        r.claim = "strong iff no independent set of size >= n/2 (expected " + show(no_large_independent) + ")";
        r.observed = "strong = " + show(strong);
        r.holds = strong == no_large_independent;
        break;
    }
    }
    return r;
}

SimpleGraph gen_half_vc_graph(const SimpleGraph &g, std::size_t k) {
    const auto n = g.vertex_count();
    if (n == 0)
        throw InputError("Ĝ needs a non-empty graph");
    if (k > n)
        throw InputError("k must lie in 0..|V|");
    const auto nx = n - k - (k < n ? 1 : 0);
    const auto ny = k + 1;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v)
        names.push_back("v:" + g.names()[v]);
    for (std::size_t i = 1; i <= nx; ++i)
        names.push_back(idx("X:", i));
    for (std::size_t i = 1; i <= ny; ++i)
        names.push_back(idx("Y:", i));
    names.push_back("w");
    auto edges = g.edges();
    const auto x0 = n, y0 = n + nx, w = n + nx + ny;
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = i + 1; j < nx; ++j)
            edges.emplace_back(x0 + i, x0 + j);
    for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j = 0; j < ny; ++j)
            edges.emplace_back(x0 + i, y0 + j);
    for (std::size_t v = 0; v < w; ++v)
        edges.emplace_back(w, v);
    return SimpleGraph(std::move(names), std::move(edges));
}

RelationCheck verify_half_vc(const SimpleGraph &g, std::size_t k, const Limits &limits) {
    const auto hat = gen_half_vc_graph(g, k);
    const bool small = oracle::min_vertex_cover(g, limits) <= k;
    const bool hat_small = oracle::min_vertex_cover(hat, limits) <= g.vertex_count();
    return {small == hat_small, "G has a vertex cover <= k (" + show(small) + ") iff Ĝ has one <= n",
            "Ĝ has a vertex cover <= n: " + show(hat_small)};
}

NecessaryPlayerGame gen_necessary_player(const InfluenceGame &game, std::size_t validation_cap) {
    const auto &g = game.graph();
    const auto n = g.node_count();
    InfluenceGraph::Builder b(true);
    for (NodeIndex v = 0; v < n; ++v)
        b.add_node(g.id(v), g.threshold(v));
    for (const auto &e : g.edges()) {
        b.add_edge(e.from, e.to, e.weight);
        if (!g.directed())
            b.add_edge(e.to, e.from, e.weight);
    }
    const auto x = b.add_node("x", 1);
    const auto y = b.add_node("y", game.quota() + 1);
    b.add_edge(x, y, 1);
    for (NodeIndex v = 0; v < n; ++v)
        b.add_edge(v, y, 1);
    for (std::size_t i = 1; i <= 2 * n; ++i)
        b.add_edge(y, b.add_node(idx("a:", i), 1), 1);

    auto players = game.players();
    players.push_back(x);
    InfluenceGame plus(std::make_shared<const InfluenceGraph>(std::move(b).build()),
                       static_cast<std::int64_t>(2 * n), std::move(players));

    NecessaryPlayerReport report;
    const auto np = game.player_count();
    if (np <= validation_cap) {
        report.validated = true;
        TeamEvaluator in(game), out(plus);
        const PlayerMask xbit = PlayerMask{1} << np;
        std::size_t mismatches = 0;
        for (PlayerMask s = 0; s <= full_mask(np + 1); ++s) {
            const bool want = (s & xbit) && in.wins(s & ~xbit);
            ++report.teams_checked;
            if (out.wins(s) == want)
                continue;
            ++mismatches;
            if (report.violations.size() < 8) {
                std::string team;
                for (auto i : members(s))
                    team += (team.empty() ? "" : ",") + plus.player_id(i);
                report.violations.push_back("{" + team + "}");
            }
        }
        report.holds = mismatches == 0;
    }
    return {std::move(plus), std::move(report)};
}

std::pair<InfluenceGame, InfluenceGame> gen_iso_pair(const SimpleGraph &g, std::size_t k, const Limits &limits) {
    auto first = gen_delta1(g, k).game;
    const auto n = g.vertex_count();
    std::vector<std::int64_t> weights(n, 1);
    weights.push_back(0);
    const WeightedGame wg(static_cast<std::int64_t>(k) + 1, weights);
    auto names = first.player_ids();
    auto second = wg.quota <= wg.total_weight() ? from_weighted_unweighted(wg, names, limits) : from_weighted(wg, names);
    return {std::move(first), std::move(second)};
}

RelationCheck verify_iso_pair(const SimpleGraph &g, std::size_t k, const Limits &limits) {
    const auto [a, b] = gen_iso_pair(g, k, limits);
    const bool no_small_cover = oracle::min_vertex_cover(g, limits) > k;
    const bool equiv = equivalent(a, b, limits);
    RelationCheck r;
    r.claim = "equivalent iff no vertex cover of size <= k (expected " + show(no_small_cover) + ")";
    r.observed = "equivalent = " + show(equiv);
    r.holds = equiv == no_small_cover;
    if (a.player_count() <= limits.iso_players) {
        const bool iso = isomorphic(a, b, limits).has_value();
        r.observed += ", isomorphic = " + show(iso);
        r.holds = r.holds && iso == no_small_cover;
    }
    return r;
}

} // namespace igt
