#pragma once

#include "igt/analysis.hpp"
#include "igt/game_forms.hpp"
#include "igt/influence_game.hpp"
#include "igt/simple_graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igt {

enum class FamilyTag { MaxInfluenceFullSpread, MaxInfluence, MinInfluence, General };

std::string to_string(FamilyTag t);

/// Undirected, unweighted, f(v) = d(v) everywhere.
bool is_max_influence(const InfluenceGame &game);
/// Undirected, unweighted, f ≡ 1.
bool is_min_influence(const InfluenceGame &game);

/// Most specific tag: full spread (max influence with q = |V| and N = V),
/// then max influence, then min influence.
FamilyTag classify(const InfluenceGame &game);

struct Component {
    std::vector<NodeIndex> nodes; // ascending
    std::size_t size = 0;
    std::size_t players = 0;
};

/// Connected components of an undirected game, sorted by (size, smallest
/// node). `player_weight` is w_N, the total size of components holding a
/// player; `isolated` counts single-vertex components.
struct ComponentProfile {
    std::vector<Component> components;
    std::size_t player_weight = 0;
    std::size_t isolated = 0;
};

ComponentProfile component_profile(const InfluenceGame &game);

/// Proper, strong and decisive for a full-spread max-influence game, from
/// bipartiteness and the shape of the edge set.
bool max_game_property(const InfluenceGame &game, GameProperty kind);

/// Width of a full-spread max-influence game: n-2 when G has an edge,
/// none otherwise.
std::optional<std::int64_t> max_width_full_spread(const InfluenceGame &game);

/// Whether exactly `alpha` vertices can be deleted from `graph` without
/// leaving an isolated vertex. Throws InputError if `graph` already has one.
bool can_remove_without_isolating(const SimpleGraph &graph, std::size_t alpha);

/// Width of a max-influence game with N = V and any quota.
std::optional<std::int64_t> max_width(const InfluenceGame &game);

/// Length and Width by component sums and a knapsack over components;
/// sLength and sWidth follow from them.
std::optional<std::int64_t> min_measure(const InfluenceGame &game, MeasureKind kind);

bool min_game_property(const InfluenceGame &game, GameProperty kind);

/// [q; w_1, ..., w_k]: one player per player-holding component, weights in
/// descending order (ties by smallest node).
WeightedGame min_reduced_weighted(const InfluenceGame &game);

enum class Method { Auto, Brute, Special };

Method parse_method(std::string_view s);

/// Auto uses a special algorithm when the game belongs to a family that
/// has one and falls back to enumeration otherwise. Special throws
/// InputError when no special algorithm applies.
std::optional<std::int64_t> compute_measure(const InfluenceGame &game, MeasureKind kind, Method method,
                                            const Limits &limits = {});
bool compute_game_property(const InfluenceGame &game, GameProperty kind, Method method, const Limits &limits = {});

} // namespace igt
