#pragma once

#include "igt/bits.hpp"
#include "igt/game_forms.hpp"
#include "igt/influence_graph.hpp"
#include "igt/limits.hpp"
#include "igt/spread.hpp"

#include <memory>
#include <string>
#include <vector>

namespace igt {

/// (G, w, f, q, N): a team X ⊆ N is successful iff |F(X)| >= q.
/// The graph is shared and immutable, so copies are cheap.
class InfluenceGame {
  public:
    /// Throws ValidationError unless 0 <= quota <= |V|+1 and every player is
    /// a distinct node of the graph.
    InfluenceGame(std::shared_ptr<const InfluenceGraph> graph, std::int64_t quota, std::vector<NodeIndex> players);
    InfluenceGame(InfluenceGraph graph, std::int64_t quota, const std::vector<std::string> &players);
    /// Players N = V in node order.
    static InfluenceGame all_players(InfluenceGraph graph, std::int64_t quota);

    const InfluenceGraph &graph() const { return *graph_; }
    const std::shared_ptr<const InfluenceGraph> &graph_ptr() const { return graph_; }
    std::int64_t quota() const { return quota_; }

    std::size_t player_count() const { return players_.size(); }
    const std::vector<NodeIndex> &players() const { return players_; }
    NodeIndex player_node(std::size_t position) const { return players_[position]; }
    const std::string &player_id(std::size_t position) const { return graph_->id(players_[position]); }
    std::vector<std::string> player_ids() const;
    bool is_player(NodeIndex v) const { return player_pos_[v] != npos; }
    /// Throws InputError when `id` is not a player.
    std::size_t position(std::string_view id) const;

    /// Team from player ids; throws InputError for non-players.
    NodeSet team(const std::vector<std::string> &ids) const;
    NodeSet team(PlayerMask mask) const;
    NodeSet all_players_set() const;

  private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::shared_ptr<const InfluenceGraph> graph_;
    std::int64_t quota_;
    std::vector<NodeIndex> players_;
    std::vector<std::size_t> player_pos_;
};

/// |F(X)| >= q. Throws InputError when X contains a non-player.
bool is_successful(const InfluenceGame &game, const NodeSet &team);
std::size_t spread_size(const InfluenceGame &game, const NodeSet &team);

/// Mask-based success test for enumeration loops over <= 63 players.
/// Holds scratch buffers; one instance per thread.
class TeamEvaluator {
  public:
    explicit TeamEvaluator(const InfluenceGame &game);

    bool wins(PlayerMask team);
    std::size_t spread_size(PlayerMask team);

  private:
    const InfluenceGame *game_;
    Spreader spreader_;
    std::vector<NodeIndex> seeds_;
};

/// Success of every team, indexed by mask. Size 2^n.
std::vector<char> winning_table(const InfluenceGame &game, const Limits &limits = {});

/// Exhaustive expansion to an explicit game (W^m form by default).
ExplicitGame to_explicit(const InfluenceGame &game, const Limits &limits = {},
                         FamilyKind kind = FamilyKind::MinimalWinning);

} // namespace igt
