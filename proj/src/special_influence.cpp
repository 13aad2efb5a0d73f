#include "igt/special_influence.hpp"

#include "igt/constructions.hpp"
#include "igt/errors.hpp"

#include <algorithm>
#include <numeric>

namespace igt {

std::string to_string(FamilyTag t) {
    switch (t) {
    case FamilyTag::MaxInfluenceFullSpread:
        return "max_influence_full_spread";
    case FamilyTag::MaxInfluence:
        return "max_influence";
    case FamilyTag::MinInfluence:
        return "min_influence";
    case FamilyTag::General:
        return "general";
    }
    return {};
}

namespace {

bool undirected_unweighted(const InfluenceGraph &g) { return !g.directed() && g.unweighted(); }

std::vector<std::vector<NodeIndex>> adjacency(const InfluenceGraph &g) {
    std::vector<std::vector<NodeIndex>> adj(g.node_count());
    for (NodeIndex v = 0; v < g.node_count(); ++v)
        for (const auto &arc : g.out_arcs(v))
            adj[v].push_back(arc.target);
    return adj;
}

std::vector<std::vector<std::size_t>> components_of(const std::vector<std::vector<std::size_t>> &adj) {
    std::vector<int> seen(adj.size(), 0);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < adj.size(); ++s) {
        if (seen[s])
            continue;
        std::vector<std::size_t> comp{s}, stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    comp.push_back(v);
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::vector<std::vector<std::size_t>> simple_adjacency(const SimpleGraph &g) {
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        adj[v] = g.neighbours(v);
    return adj;
}

void require(bool ok, const char *what) {
    if (!ok)
        throw InputError(std::string("game is not a ") + what + " game");
}

// Reachable subset sums of `items`, up to `cap`.
std::vector<char> subset_sums(const std::vector<std::size_t> &items, std::size_t cap) {
    std::vector<char> reach(cap + 1, 0);
    reach[0] = 1;
    for (auto w : items)
        for (std::size_t s = cap + 1; s-- > w;)
            if (reach[s - w])
                reach[s] = 1;
    return reach;
}

} // namespace

bool is_max_influence(const InfluenceGame &game) {
    const auto &g = game.graph();
    if (!undirected_unweighted(g))
        return false;
    for (NodeIndex v = 0; v < g.node_count(); ++v)
        if (g.threshold(v) != static_cast<std::int64_t>(g.degree(v)))
            return false;
    return true;
}

bool is_min_influence(const InfluenceGame &game) {
    const auto &g = game.graph();
    if (!undirected_unweighted(g))
        return false;
    return std::all_of(g.thresholds().begin(), g.thresholds().end(), [](auto t) { return t == 1; });
}

FamilyTag classify(const InfluenceGame &game) {
    if (is_max_influence(game)) {
        const auto n = game.graph().node_count();
        if (game.quota() == static_cast<std::int64_t>(n) && game.player_count() == n)
            return FamilyTag::MaxInfluenceFullSpread;
        return FamilyTag::MaxInfluence;
    }
    if (is_min_influence(game))
        return FamilyTag::MinInfluence;
    return FamilyTag::General;
}

ComponentProfile component_profile(const InfluenceGame &game) {
    const auto &g = game.graph();
    if (g.directed())
        throw InputError("component profile requires an undirected graph");
    const auto adj = adjacency(g);
    std::vector<std::vector<std::size_t>> sadj(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
        sadj[v].assign(adj[v].begin(), adj[v].end());
    ComponentProfile p;
    for (auto &nodes : components_of(sadj)) {
        Component c;
        c.size = nodes.size();
        for (auto v : nodes) {
            c.nodes.push_back(static_cast<NodeIndex>(v));
            if (game.is_player(static_cast<NodeIndex>(v)))
                ++c.players;
        }
        if (c.players > 0)
            p.player_weight += c.size;
        if (c.size == 1)
            ++p.isolated;
        p.components.push_back(std::move(c));
    }
    std::sort(p.components.begin(), p.components.end(), [](const Component &a, const Component &b) {
        return std::pair(a.size, a.nodes.front()) < std::pair(b.size, b.nodes.front());
    });
    return p;
}

bool max_game_property(const InfluenceGame &game, GameProperty kind) {
    require(classify(game) == FamilyTag::MaxInfluenceFullSpread, "full-spread maximum influence");
    const auto g = skeleton(game.graph());
    const auto comps = components_of(simple_adjacency(g));

    // 2-colouring of every component.
    std::vector<int> colour(g.vertex_count(), -1);
    bool bipartite = true;
    for (const auto &comp : comps) {
        colour[comp.front()] = 0;
        std::vector<std::size_t> stack{comp.front()};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : g.neighbours(u)) {
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    bipartite = false;
                }
            }
        }
    }

    // Edges pairwise intersect iff they form a star or a triangle.
    std::size_t with_edges = 0;
    bool star_or_triangle = true, triangle = false;
    for (const auto &comp : comps) {
        if (comp.size() < 2)
            continue;
        ++with_edges;
        std::size_t edges = 0, max_degree = 0;
        for (auto v : comp) {
            edges += g.degree(v);
            max_degree = std::max(max_degree, g.degree(v));
        }
        edges /= 2;
        const bool is_triangle = comp.size() == 3 && edges == 3;
        const bool is_star = max_degree == comp.size() - 1 && edges == comp.size() - 1;
        star_or_triangle = star_or_triangle && (is_triangle || is_star);
        triangle = is_triangle;
    }
    const bool proper = !bipartite;
    const bool strong = with_edges == 0 || (with_edges == 1 && star_or_triangle);
    switch (kind) {
    case GameProperty::Proper:
        return proper;
    case GameProperty::Strong:
        return strong;
    case GameProperty::Decisive:
        return with_edges == 1 && triangle;
    }
    return false;
}

std::optional<std::int64_t> max_width_full_spread(const InfluenceGame &game) {
    require(classify(game) == FamilyTag::MaxInfluenceFullSpread, "full-spread maximum influence");
    if (game.graph().edge_count() == 0)
        return std::nullopt;
    return static_cast<std::int64_t>(game.graph().node_count()) - 2;
}

bool can_remove_without_isolating(const SimpleGraph &graph, std::size_t alpha) {
    const auto comps = components_of(simple_adjacency(graph));
    std::vector<std::size_t> sizes;
    for (const auto &c : comps) {
        if (c.size() == 1)
            throw InputError("graph has an isolated vertex '" + graph.names()[c.front()] + "'");
        sizes.push_back(c.size());
    }
    std::sort(sizes.begin(), sizes.end());
    const std::size_t n = graph.vertex_count();
    if (alpha == 0 || alpha == n)
        return true;
    if (alpha > n)
        return false;
    if (std::all_of(sizes.begin(), sizes.end(), [](auto w) { return w == 2; }))
        return alpha % 2 == 0;
    // Largest prefix j of the sorted sizes with β = w_1 + ... + w_j <= α.
    std::size_t beta = 0, j = 0;
    while (j < sizes.size() && beta + sizes[j] <= alpha)
        beta += sizes[j++];
    if (beta == alpha)
        return true;
    const auto next = sizes[j];
    if (next > alpha - beta + 1)
        return true;
    return j + 1 < sizes.size();
}

std::optional<std::int64_t> max_width(const InfluenceGame &game) {
    require(is_max_influence(game), "maximum influence");
    const auto &graph = game.graph();
    if (game.player_count() != graph.node_count())
        throw InputError("maximum influence Width requires N = V");
    const auto g = skeleton(graph);
    std::vector<std::string> names;
    std::vector<std::size_t> index(g.vertex_count(), 0);
    std::size_t isolated = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) {
            ++isolated;
            continue;
        }
        index[v] = names.size();
        names.push_back(g.names()[v]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(index[u], index[v]);
    const SimpleGraph core(std::move(names), std::move(edges));

    // Isolated vertices are active whatever the team, so they can join any
    // unsuccessful team for free; the rest must avoid isolating anyone.
    const auto rest = game.quota() - static_cast<std::int64_t>(isolated);
    if (rest <= 0)
        return std::nullopt;
    auto alpha = std::min<std::int64_t>(rest - 1, static_cast<std::int64_t>(core.vertex_count()));
    for (; alpha > 0; --alpha)
        if (can_remove_without_isolating(core, static_cast<std::size_t>(alpha)))
            break;
    return static_cast<std::int64_t>(isolated) + alpha;
}

namespace {

struct PlayerComponents {
    std::vector<std::size_t> sizes;   // w_i
    std::vector<std::size_t> players; // n_i
    std::size_t total = 0;            // w_N
};

PlayerComponents player_components(const InfluenceGame &game) {
    PlayerComponents pc;
    for (const auto &c : component_profile(game).components)
        if (c.players > 0) {
            pc.sizes.push_back(c.size);
            pc.players.push_back(c.players);
            pc.total += c.size;
        }
    return pc;
}

} // namespace

std::optional<std::int64_t> min_measure(const InfluenceGame &game, MeasureKind kind) {
    require(is_min_influence(game), "minimum influence");
    const auto q = game.quota();
    const auto n = game.player_count();
    const auto pc = player_components(game);

    auto length = [&]() -> std::optional<std::int64_t> {
        if (q <= 0)
            return 0;
        auto sizes = pc.sizes;
        std::sort(sizes.rbegin(), sizes.rend());
        std::int64_t sum = 0;
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            sum += static_cast<std::int64_t>(sizes[j]);
            if (sum >= q)
                return static_cast<std::int64_t>(j + 1);
        }
        return std::nullopt;
    };
    auto width = [&]() -> std::optional<std::int64_t> {
        if (q <= 0)
            return std::nullopt;
        const auto cap = std::min<std::size_t>(static_cast<std::size_t>(q - 1), pc.total);
        // best[c]: most players in components of total size <= c.
        std::vector<std::int64_t> best(cap + 1, 0);
        for (std::size_t i = 0; i < pc.sizes.size(); ++i)
            for (std::size_t c = cap + 1; c-- > pc.sizes[i];)
                best[c] = std::max(best[c], best[c - pc.sizes[i]] + static_cast<std::int64_t>(pc.players[i]));
        return best[cap];
    };

    switch (kind) {
    case MeasureKind::Length:
        return length();
    case MeasureKind::Width:
        return width();
    case MeasureKind::SLength:
        return slength_from_width(width(), n);
    case MeasureKind::SWidth:
        return swidth_from_length(length(), n);
    }
    return std::nullopt;
}

bool min_game_property(const InfluenceGame &game, GameProperty kind) {
    require(is_min_influence(game), "minimum influence");
    const auto q = game.quota();
    const auto pc = player_components(game);

    auto strong = [&] {
        if (q <= 0)
            return true;
        const auto cap = std::min<std::size_t>(static_cast<std::size_t>(q - 1), pc.total);
        const auto reach = subset_sums(pc.sizes, cap);
        std::size_t alpha_max = cap;
        while (!reach[alpha_max])
            --alpha_max;
        return static_cast<std::int64_t>(pc.total - alpha_max) >= q;
    };
    auto proper = [&] {
        std::size_t w_b = 0, w_a = 0;
        std::vector<std::size_t> a;
        for (std::size_t i = 0; i < pc.sizes.size(); ++i) {
            if (pc.players[i] > 1) {
                w_b += pc.sizes[i];
            } else {
                a.push_back(pc.sizes[i]);
                w_a += pc.sizes[i];
            }
        }
        if (static_cast<std::int64_t>(w_b) >= q)
            return false;
        const auto rest = static_cast<std::size_t>(q - static_cast<std::int64_t>(w_b));
        const auto reach = subset_sums(a, w_a);
        for (std::size_t s = rest; s <= w_a; ++s)
            if (reach[s])
                return w_a - s < rest; // s is α_min
        return true;
    };

    switch (kind) {
    case GameProperty::Proper:
        return proper();
    case GameProperty::Strong:
        return strong();
    case GameProperty::Decisive:
        return proper() && strong();
    }
    return false;
}

WeightedGame min_reduced_weighted(const InfluenceGame &game) {
    require(is_min_influence(game), "minimum influence");
    auto comps = component_profile(game).components;
    std::stable_sort(comps.begin(), comps.end(), [](const Component &a, const Component &b) {
        return std::pair(b.size, a.nodes.front()) < std::pair(a.size, b.nodes.front());
    });
    std::vector<std::int64_t> weights;
    for (const auto &c : comps)
        if (c.players > 0)
            weights.push_back(static_cast<std::int64_t>(c.size));
    return WeightedGame(game.quota(), std::move(weights));
}

Method parse_method(std::string_view s) {
    if (s == "auto")
        return Method::Auto;
    if (s == "brute")
        return Method::Brute;
    if (s == "special")
        return Method::Special;
    throw InputError("unknown method '" + std::string(s) + "'");
}

namespace {

std::optional<std::optional<std::int64_t>> special_measure(const InfluenceGame &game, MeasureKind kind) {
    if (is_min_influence(game))
        return min_measure(game, kind);
    if (kind == MeasureKind::Width || kind == MeasureKind::SLength) {
        std::optional<std::int64_t> width;
        if (classify(game) == FamilyTag::MaxInfluenceFullSpread)
            width = max_width_full_spread(game);
        else if (is_max_influence(game) && game.player_count() == game.graph().node_count())
            width = max_width(game);
        else
            return std::nullopt;
        if (kind == MeasureKind::Width)
            return width;
        return slength_from_width(width, game.player_count());
    }
    return std::nullopt;
}

std::optional<bool> special_property(const InfluenceGame &game, GameProperty kind) {
    if (classify(game) == FamilyTag::MaxInfluenceFullSpread)
        return max_game_property(game, kind);
    if (is_min_influence(game))
        return min_game_property(game, kind);
    return std::nullopt;
}

} // namespace

std::optional<std::int64_t> compute_measure(const InfluenceGame &game, MeasureKind kind, Method method,
                                            const Limits &limits) {
    if (method != Method::Brute)
        if (auto r = special_measure(game, kind))
            return *r;
    if (method == Method::Special)
        throw InputError("no special algorithm computes " + to_string(kind) + " for a " + to_string(classify(game)) +
                         " game");
    return measure(game, kind, limits);
}

bool compute_game_property(const InfluenceGame &game, GameProperty kind, Method method, const Limits &limits) {
    if (method != Method::Brute)
        if (auto r = special_property(game, kind))
            return *r;
    if (method == Method::Special)
        throw InputError("no special algorithm decides " + to_string(kind) + " for a " + to_string(classify(game)) +
                         " game");
    return game_property(game, kind, limits);
}

} // namespace igt
