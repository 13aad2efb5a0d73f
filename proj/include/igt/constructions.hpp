#pragma once

#include "igt/game_forms.hpp"
#include "igt/influence_game.hpp"
#include "igt/limits.hpp"
#include "igt/simple_graph.hpp"

#include <string>
#include <vector>

namespace igt {

/// Unweighted influence game realising a W^m-form game. Player nodes carry
/// the explicit game's player ids and threshold 1; each minimal winning
/// coalition X gets sLength - |X| gadget nodes of threshold |X| fed by X's
/// players; quota sLength. W = ∅ yields quota |V|+1 and ∅ ∈ W^m quota 0.
InfluenceGame from_minimal_winning(const ExplicitGame &game);

/// Weighted realisation of [q; w]: players (threshold 1) feed a central
/// node of threshold q with arcs of weight w_i; the centre feeds n sinks.
/// Quota n+1. Zero-weight players get no arc.
InfluenceGame from_weighted(const WeightedGame &game, std::vector<std::string> names = {});

/// Unweighted realisation of [q; w]: player i feeds w_i relay nodes, every
/// relay feeds a central node of threshold q, which feeds n + Σw sinks.
/// Quota n + Σw. Requires q <= w(N) and Σw within limits.weight_budget.
InfluenceGame from_weighted_unweighted(const WeightedGame &game, std::vector<std::string> names = {},
                                       const Limits &limits = {});

/// Union or intersection of two influence games over the same player ids.
/// Each input graph is unrolled into |V| activation rounds; a q-node per
/// input, an x-node (threshold 1 or 2) and a sink of 4n²+3n+2 nodes
/// (n = the larger |V|) decide the outcome. The result is checked against
/// the inputs on every team when |N| <= limits.combine_validation and on a
/// fixed pseudo-random sample of teams otherwise; a mismatch throws
/// ValidationError.
InfluenceGame combine(const InfluenceGame &a, const InfluenceGame &b, CombineMode mode, const Limits &limits = {});

/// Union or intersection of two weighted games with n players each:
/// shared player nodes feed two quota nodes with weights w¹_i and w²_i, an
/// x-node of threshold 1 (union) or 2 (intersection) and n sinks.
/// Quota n+2 (union) or n+3 (intersection).
InfluenceGame combine_weighted(const WeightedGame &a, const WeightedGame &b, CombineMode mode,
                               std::vector<std::string> names = {});

/// Γ(G): thresholds equal degrees, quota |V|, every node a player.
/// Successful teams are exactly the vertex covers of G.
InfluenceGame vertex_cover_game(const SimpleGraph &graph);

/// The undirected skeleton of an influence graph. Throws for directed input.
SimpleGraph skeleton(const InfluenceGraph &graph);

} // namespace igt
