#include "igt/influence_game.hpp"

#include "igt/errors.hpp"

namespace igt {

InfluenceGame::InfluenceGame(std::shared_ptr<const InfluenceGraph> graph, std::int64_t quota,
                             std::vector<NodeIndex> players)
    : graph_(std::move(graph)), quota_(quota), players_(std::move(players)) {
    const auto nv = static_cast<std::int64_t>(graph_->node_count());
    if (quota_ < 0 || quota_ > nv + 1)
        throw ValidationError("quota " + std::to_string(quota_) + " out of range 0.." + std::to_string(nv + 1));
    player_pos_.assign(graph_->node_count(), npos);
    for (std::size_t i = 0; i < players_.size(); ++i) {
        const auto v = players_[i];
        if (v >= graph_->node_count())
            throw ValidationError("player is not a node of the graph");
        if (player_pos_[v] != npos)
            throw ValidationError("duplicate player '" + graph_->id(v) + "'");
        player_pos_[v] = i;
    }
}

namespace {

std::vector<NodeIndex> resolve(const InfluenceGraph &g, const std::vector<std::string> &ids) {
    std::vector<NodeIndex> out;
    out.reserve(ids.size());
    for (const auto &id : ids) {
        auto v = g.find(id);
        if (!v)
            throw ValidationError("player '" + id + "' is not a node of the graph");
        out.push_back(*v);
    }
    return out;
}

} // namespace

InfluenceGame::InfluenceGame(InfluenceGraph graph, std::int64_t quota, const std::vector<std::string> &players)
    : InfluenceGame(std::make_shared<const InfluenceGraph>(std::move(graph)), quota, std::vector<NodeIndex>{}) {
    *this = InfluenceGame(graph_, quota, resolve(*graph_, players));
}

InfluenceGame InfluenceGame::all_players(InfluenceGraph graph, std::int64_t quota) {
    std::vector<NodeIndex> players(graph.node_count());
    for (NodeIndex v = 0; v < players.size(); ++v)
        players[v] = v;
    return InfluenceGame(std::make_shared<const InfluenceGraph>(std::move(graph)), quota, std::move(players));
}

std::vector<std::string> InfluenceGame::player_ids() const {
    std::vector<std::string> out;
    for (auto v : players_)
        out.push_back(graph_->id(v));
    return out;
}

std::size_t InfluenceGame::position(std::string_view id) const {
    auto v = graph_->find(id);
    if (!v || player_pos_[*v] == npos)
        throw InputError("'" + std::string(id) + "' is not a player of this game");
    return player_pos_[*v];
}

NodeSet InfluenceGame::team(const std::vector<std::string> &ids) const {
    NodeSet s(graph_->node_count());
    for (const auto &id : ids)
        s.insert(players_[position(id)]);
    return s;
}

NodeSet InfluenceGame::team(PlayerMask mask) const {
    NodeSet s(graph_->node_count());
    for (auto i : members(mask)) {
        if (i >= players_.size())
            throw InputError("team mask references a player outside N");
        s.insert(players_[i]);
    }
    return s;
}

NodeSet InfluenceGame::all_players_set() const {
    NodeSet s(graph_->node_count());
    for (auto v : players_)
        s.insert(v);
    return s;
}

std::size_t spread_size(const InfluenceGame &game, const NodeSet &team) {
    if (team.universe() != game.graph().node_count())
        throw InputError("team does not belong to this game's graph");
    for (auto v : team.indices())
        if (!game.is_player(v))
            throw InputError("agent '" + game.graph().id(v) + "' is not a player and cannot be seeded");
    return spread(game.graph(), team).size();
}

bool is_successful(const InfluenceGame &game, const NodeSet &team) {
    return static_cast<std::int64_t>(spread_size(game, team)) >= game.quota();
}

TeamEvaluator::TeamEvaluator(const InfluenceGame &game) : game_(&game), spreader_(game.graph()) {
    seeds_.reserve(game.player_count());
}

std::size_t TeamEvaluator::spread_size(PlayerMask team) {
    seeds_.clear();
    while (team) {
        seeds_.push_back(game_->player_node(static_cast<std::size_t>(std::countr_zero(team))));
        team &= team - 1;
    }
    return spreader_.count(seeds_);
}

bool TeamEvaluator::wins(PlayerMask team) {
    if (game_->quota() <= 0)
        return true;
    seeds_.clear();
    while (team) {
        seeds_.push_back(game_->player_node(static_cast<std::size_t>(std::countr_zero(team))));
        team &= team - 1;
    }
    const auto q = static_cast<std::size_t>(game_->quota());
    return spreader_.count(seeds_, q) >= q;
}

std::vector<char> winning_table(const InfluenceGame &game, const Limits &limits) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "winning-table enumeration");
    TeamEvaluator eval(game);
    std::vector<char> table(std::size_t{1} << n);
    for (PlayerMask s = 0; s < table.size(); ++s)
        table[s] = eval.wins(s) ? 1 : 0;
    return table;
}

ExplicitGame to_explicit(const InfluenceGame &game, const Limits &limits, FamilyKind kind) {
    const auto table = winning_table(game, limits);
    std::vector<PlayerMask> family;
    for (PlayerMask s = 0; s < table.size(); ++s) {
        if (!table[s])
            continue;
        if (kind == FamilyKind::MinimalWinning) {
            bool minimal = true;
            for (auto i : members(s))
                if (table[s & ~(PlayerMask{1} << i)]) {
                    minimal = false;
                    break;
                }
            if (!minimal)
                continue;
        }
        family.push_back(s);
    }
    return ExplicitGame(game.player_ids(), std::move(family), kind);
}

} // namespace igt
