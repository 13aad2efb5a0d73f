#pragma once

#include "igt/influence_game.hpp"
#include "igt/limits.hpp"
#include "igt/oracles.hpp"
#include "igt/simple_graph.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace igt {

/// The claim a gadget instance makes about its source instance.
enum class Relation {
    LengthIsMinSetCover,  // Length(game) = min set cover, both undefined together
    WidthIsMaxSetPacking, // Width(game) = max set packing
    Delta1Success,        // X wins ⇔ |X∩V| >= k+1 or (z ∈ X and X∖{z} covers G)
    Delta2Symmetry,       // z, t symmetric ⇔ no vertex cover of size <= k
    Delta3Strong,         // strong ⇔ no independent set of size >= n/2
};

struct Provenance {
    std::string gadget;
    std::string source;
    std::vector<std::pair<std::string, std::int64_t>> parameters;
};

struct GadgetInstance {
    InfluenceGame game;
    Provenance provenance;
    Relation relation;
    std::variant<SetSystem, SimpleGraph> source;
    std::int64_t k = 0;
};

struct RelationCheck {
    bool holds = false;
    std::string claim;
    std::string observed;
};

std::string describe(const SetSystem &c);
std::string describe(const SimpleGraph &g);

/// Players y_j (threshold n+1) feed the elements of C_j (threshold 1),
/// every element feeds x (threshold n), x feeds m+1 sinks; q = m+n+1.
GadgetInstance gen_setcover_length_game(const SetSystem &c);
/// The set-cover graph without x, elements of threshold 2 feeding every
/// sink directly; q = m+1.
GadgetInstance gen_setpacking_width_game(const SetSystem &c);

/// Δ1(G, k) on players "v:<vertex>" and "z", quota n+m+4.
GadgetInstance gen_delta1(const SimpleGraph &g, std::size_t k);
/// Δ1(G, k) plus t (threshold 2) and s (threshold 4) joined to x, y and t;
/// players add t, quota n+m+5.
GadgetInstance gen_delta2(const SimpleGraph &g, std::size_t k);
/// Δ3(G) with k = n/2; n must be even.
GadgetInstance gen_delta3(const SimpleGraph &g);

/// Checks the instance's relation with the analysis module and the oracles.
RelationCheck verify(const GadgetInstance &instance, const Limits &limits = {});

/// Ĝ: G plus a clique X of n-k-1 vertices, k+1 vertices Y joined to all of
/// X, and w joined to everything. G has a vertex cover of size <= k iff Ĝ
/// has one of size <= n. k = n leaves X empty. G must be non-empty.
SimpleGraph gen_half_vc_graph(const SimpleGraph &g, std::size_t k);
RelationCheck verify_half_vc(const SimpleGraph &g, std::size_t k, const Limits &limits = {});

/// Outcome of checking Γ⁺ against {S ∪ {x} : S wins in the input}.
struct NecessaryPlayerReport {
    bool validated = false; // false when |N| exceeded the validation cap
    std::size_t teams_checked = 0;
    bool holds = false;
    std::vector<std::string> violations; // first few offending teams
};

struct NecessaryPlayerGame {
    InfluenceGame game;
    NecessaryPlayerReport report;
};

/// Γ⁺: adds x (threshold 1), y (threshold q+1) fed by x and every node of
/// V, and 2|V| nodes a_i fed by y; quota 2|V|; N' = N ∪ {x}. Built as
/// written and checked by enumeration when |N| <= validation_cap.
NecessaryPlayerGame gen_necessary_player(const InfluenceGame &game, std::size_t validation_cap = 10);

/// (Δ1(G,k), the weighted game [k+1; 1,...,1,0] realised without weights
/// over the same player ids). Equivalent iff G has no vertex cover of size
/// <= k. With k = |V| the quota exceeds w(N) and the weighted realisation
/// is used instead.
std::pair<InfluenceGame, InfluenceGame> gen_iso_pair(const SimpleGraph &g, std::size_t k, const Limits &limits = {});
RelationCheck verify_iso_pair(const SimpleGraph &g, std::size_t k, const Limits &limits = {});

} // namespace igt
