#include "igt/document.hpp"

#include "igt/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace igt {

using json = nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string &path, const std::string &msg) {
    throw InputError(path + ": " + msg);
}

void allow_keys(const json &obj, const std::string &path, std::initializer_list<const char *> keys) {
    for (const auto &[k, v] : obj.items())
        if (std::none_of(keys.begin(), keys.end(), [&](const char *a) { return k == a; }))
            schema_error(path + "." + k, "unknown field");
}

const json &object_at(const json &j, const std::string &path) {
    if (!j.is_object())
        schema_error(path, "expected an object");
    return j;
}

const json &array_at(const json &j, const std::string &path) {
    if (!j.is_array())
        schema_error(path, "expected an array");
    return j;
}

const json &field(const json &obj, const char *key, const std::string &path) {
    auto it = obj.find(key);
    if (it == obj.end())
        schema_error(path + "." + key, "missing required field");
    return *it;
}

std::int64_t integer_at(const json &j, const std::string &path) {
    if (j.is_number_unsigned()) {
        if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX))
            schema_error(path, "integer out of range");
        return static_cast<std::int64_t>(j.get<std::uint64_t>());
    }
    if (!j.is_number_integer())
        schema_error(path, "expected an integer");
    return j.get<std::int64_t>();
}

std::string string_at(const json &j, const std::string &path) {
    if (!j.is_string())
        schema_error(path, "expected a string");
    return j.get<std::string>();
}

std::vector<std::string> strings_at(const json &j, const std::string &path) {
    std::vector<std::string> out;
    const auto &a = array_at(j, path);
    for (std::size_t i = 0; i < a.size(); ++i)
        out.push_back(string_at(a[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

// Runs a payload constructor, prefixing invariant violations with `path`.
template <typename Fn> auto validated(const std::string &path, Fn &&fn) {
    try {
        return fn();
    } catch (const ValidationError &e) {
        throw ValidationError(path + ": " + e.what());
    }
}

InfluenceGame parse_influence_game(const json &j, const std::string &path) {
    object_at(j, path);
    allow_keys(j, path, {"nodes", "edges", "directed", "quota", "players"});
    bool directed = true;
    if (auto it = j.find("directed"); it != j.end()) {
        if (!it->is_boolean())
            schema_error(path + ".directed", "expected a boolean");
        directed = it->get<bool>();
    }
    InfluenceGraph::Builder b(directed);
    const auto &nodes = array_at(field(j, "nodes", path), path + ".nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto p = path + ".nodes[" + std::to_string(i) + "]";
        object_at(nodes[i], p);
        allow_keys(nodes[i], p, {"id", "threshold"});
        auto id = string_at(field(nodes[i], "id", p), p + ".id");
        auto t = integer_at(field(nodes[i], "threshold", p), p + ".threshold");
        validated(p, [&] { return b.add_node(std::move(id), t); });
    }
    if (auto it = j.find("edges"); it != j.end()) {
        const auto &edges = array_at(*it, path + ".edges");
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto p = path + ".edges[" + std::to_string(i) + "]";
            object_at(edges[i], p);
            allow_keys(edges[i], p, {"from", "to", "weight"});
            const auto from = string_at(field(edges[i], "from", p), p + ".from");
            const auto to = string_at(field(edges[i], "to", p), p + ".to");
            std::int64_t w = 1;
            if (auto wt = edges[i].find("weight"); wt != edges[i].end())
                w = integer_at(*wt, p + ".weight");
            validated(p, [&] {
                b.add_edge(from, to, w);
                return 0;
            });
        }
    }
    const auto quota = integer_at(field(j, "quota", path), path + ".quota");
    auto graph = std::move(b).build();
    std::vector<std::string> players;
    if (auto it = j.find("players"); it != j.end())
        players = strings_at(*it, path + ".players");
    else
        players = graph.ids();
    return validated(path, [&] { return InfluenceGame(std::move(graph), quota, players); });
}

WeightedGame parse_weighted_game(const json &j, const std::string &path) {
    object_at(j, path);
    allow_keys(j, path, {"quota", "weights"});
    const auto quota = integer_at(field(j, "quota", path), path + ".quota");
    std::vector<std::int64_t> weights;
    const auto &w = array_at(field(j, "weights", path), path + ".weights");
    for (std::size_t i = 0; i < w.size(); ++i)
        weights.push_back(integer_at(w[i], path + ".weights[" + std::to_string(i) + "]"));
    return validated(path, [&] { return WeightedGame(quota, std::move(weights)); });
}

ExplicitGame parse_explicit_game(const json &j, const std::string &path) {
    object_at(j, path);
    allow_keys(j, path, {"players", "minimal_winning", "winning"});
    const auto players = strings_at(field(j, "players", path), path + ".players");
    const bool minimal = j.contains("minimal_winning");
    if (minimal == j.contains("winning"))
        schema_error(path, "exactly one of 'minimal_winning' and 'winning' is required");
    const char *key = minimal ? "minimal_winning" : "winning";
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < players.size(); ++i)
        pos.emplace(players[i], i);
    std::vector<PlayerMask> family;
    const auto &fam = array_at(j.at(key), path + "." + key);
    for (std::size_t c = 0; c < fam.size(); ++c) {
        const auto p = path + "." + key + "[" + std::to_string(c) + "]";
        PlayerMask m = 0;
        for (const auto &id : strings_at(fam[c], p)) {
            auto it = pos.find(id);
            if (it == pos.end())
                schema_error(p, "unknown player '" + id + "'");
            if (it->second >= 64)
                schema_error(path + ".players", "explicit games support at most 64 players");
            m |= PlayerMask{1} << it->second;
        }
        family.push_back(m);
    }
    return validated(path, [&] {
        return ExplicitGame(players, std::move(family), minimal ? FamilyKind::MinimalWinning : FamilyKind::Winning);
    });
}

SimpleGraph parse_graph(const json &j, const std::string &path) {
    object_at(j, path);
    allow_keys(j, path, {"nodes", "edges"});
    const auto nodes = strings_at(field(j, "nodes", path), path + ".nodes");
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < nodes.size(); ++i)
        pos.emplace(nodes[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (auto it = j.find("edges"); it != j.end()) {
        const auto &e = array_at(*it, path + ".edges");
        for (std::size_t i = 0; i < e.size(); ++i) {
            const auto p = path + ".edges[" + std::to_string(i) + "]";
            object_at(e[i], p);
            allow_keys(e[i], p, {"from", "to"});
            auto endpoint = [&](const char *k) {
                const auto id = string_at(field(e[i], k, p), p + "." + k);
                auto f = pos.find(id);
                if (f == pos.end())
                    throw ValidationError(p + ": edge references undeclared node '" + id + "'");
                return f->second;
            };
            const auto from = endpoint("from");
            edges.emplace_back(from, endpoint("to"));
        }
    }
    return validated(path, [&] { return SimpleGraph(nodes, std::move(edges)); });
}

std::string trim_what(const std::string &what) {
    // nlohmann prefixes "[json.exception.parse_error.101] parse error at line 1, column 2: ..."
    auto p = what.find("] ");
    return p == std::string::npos ? what : what.substr(p + 2);
}

json emit_influence_game(const InfluenceGame &game) {
    const auto &g = game.graph();
    std::vector<std::pair<std::string, std::int64_t>> nodes;
    for (NodeIndex v = 0; v < g.node_count(); ++v)
        nodes.emplace_back(g.id(v), g.threshold(v));
    std::sort(nodes.begin(), nodes.end());
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (const auto &e : g.edges()) {
        auto a = g.id(e.from), b = g.id(e.to);
        if (!g.directed() && b < a)
            std::swap(a, b);
        edges.emplace_back(a, b, e.weight);
    }
    std::sort(edges.begin(), edges.end());
    auto players = game.player_ids();
    std::sort(players.begin(), players.end());

    json j;
    j["directed"] = g.directed();
    j["quota"] = game.quota();
    j["players"] = players;
    j["nodes"] = json::array();
    for (const auto &[id, t] : nodes)
        j["nodes"].push_back({{"id", id}, {"threshold", t}});
    j["edges"] = json::array();
    for (const auto &[a, b, w] : edges)
        j["edges"].push_back({{"from", a}, {"to", b}, {"weight", w}});
    return j;
}

json emit_explicit_game(const ExplicitGame &game) {
    auto players = game.players();
    std::sort(players.begin(), players.end());
    std::vector<std::vector<std::string>> family;
    for (auto m : game.family()) {
        auto names = game.names(m);
        std::sort(names.begin(), names.end());
        family.push_back(std::move(names));
    }
    std::sort(family.begin(), family.end(), [](const auto &a, const auto &b) {
        return std::pair(a.size(), a) < std::pair(b.size(), b);
    });
    json j;
    j["players"] = players;
    j[game.kind() == FamilyKind::MinimalWinning ? "minimal_winning" : "winning"] = family;
    return j;
}

json emit_graph(const SimpleGraph &g) {
    auto nodes = g.names();
    std::sort(nodes.begin(), nodes.end());
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges()) {
        auto a = g.names()[u], b = g.names()[v];
        if (b < a)
            std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    json j;
    j["nodes"] = nodes;
    j["edges"] = json::array();
    for (const auto &[a, b] : edges)
        j["edges"].push_back({{"from", a}, {"to", b}});
    return j;
}

} // namespace

std::string payload_kind(const Payload &p) {
    switch (p.index()) {
    case 0:
        return "influence_game";
    case 1:
        return "weighted_game";
    case 2:
        return "explicit_game";
    default:
        return "graph";
    }
}

GameDocument parse_document(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        throw InputError("malformed JSON: " + trim_what(e.what()));
    }
    object_at(j, "document");
    allow_keys(j, "document", {"format_version", "metadata", "influence_game", "weighted_game", "explicit_game", "graph"});
    const auto version = integer_at(field(j, "format_version", "document"), "document.format_version");
    if (version != 1)
        schema_error("document.format_version", "unsupported version " + std::to_string(version));

    std::vector<std::string> kinds;
    for (const char *k : {"influence_game", "weighted_game", "explicit_game", "graph"})
        if (j.contains(k))
            kinds.emplace_back(k);
    if (kinds.size() != 1)
        schema_error("document", "exactly one payload (influence_game, weighted_game, explicit_game or graph) is "
                                 "required");
    const auto &kind = kinds.front();
    const auto &body = j.at(kind);

    GameDocument doc{1, SimpleGraph{}, {}};
    if (kind == "influence_game")
        doc.payload = parse_influence_game(body, kind);
    else if (kind == "weighted_game")
        doc.payload = parse_weighted_game(body, kind);
    else if (kind == "explicit_game")
        doc.payload = parse_explicit_game(body, kind);
    else
        doc.payload = parse_graph(body, kind);

    if (auto it = j.find("metadata"); it != j.end()) {
        object_at(*it, "document.metadata");
        for (const auto &[k, v] : it->items())
            doc.metadata[k] = string_at(v, "document.metadata." + k);
    }
    return doc;
}

std::string emit_document(const GameDocument &doc) {
    json j;
    j["format_version"] = doc.format_version;
    if (!doc.metadata.empty())
        j["metadata"] = doc.metadata;
    const auto kind = payload_kind(doc.payload);
    std::visit(
        [&](const auto &p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, InfluenceGame>)
                j[kind] = emit_influence_game(p);
            else if constexpr (std::is_same_v<T, WeightedGame>)
                j[kind] = {{"quota", p.quota}, {"weights", p.weights}};
            else if constexpr (std::is_same_v<T, ExplicitGame>)
                j[kind] = emit_explicit_game(p);
            else
                j[kind] = emit_graph(p);
        },
        doc.payload);
    return j.dump(2) + "\n";
}

GameDocument load_document(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return parse_document(ss.str());
    } catch (const ValidationError &e) {
        throw ValidationError(path + ": " + e.what());
    } catch (const InputError &e) {
        throw InputError(path + ": " + e.what());
    }
}

} // namespace igt
