#pragma once

#include "igt/bits.hpp"
#include "igt/limits.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igt {

enum class FamilyKind { Winning, MinimalWinning };

enum class MeasureKind { Length, Width, SLength, SWidth };

enum class CombineMode { Union, Intersection };

MeasureKind parse_measure_kind(std::string_view s);
std::string to_string(MeasureKind k);
CombineMode parse_combine_mode(std::string_view s);

/// A simple game listed by its winning family W or minimal winning family
/// W^m. Coalitions are masks over `players` (at most 64). Construction
/// validates monotonicity (W) or the antichain property (W^m).
class ExplicitGame {
  public:
    ExplicitGame(std::vector<std::string> players, std::vector<PlayerMask> family, FamilyKind kind);

    const std::vector<std::string> &players() const { return players_; }
    std::size_t player_count() const { return players_.size(); }
    /// Family in canonical order (by size, then mask).
    const std::vector<PlayerMask> &family() const { return family_; }
    FamilyKind kind() const { return kind_; }

    std::size_t position(std::string_view player) const;
    PlayerMask mask_of(const std::vector<std::string> &ids) const;
    std::vector<std::string> names(PlayerMask m) const;

  private:
    std::vector<std::string> players_;
    std::vector<PlayerMask> family_;
    FamilyKind kind_;
};

/// [q; w_1, ..., w_n] with integer non-negative weights. Any q >= 0 is
/// accepted: q = 0 makes every coalition win, q > w(N) makes none win.
struct WeightedGame {
    std::int64_t quota = 0;
    std::vector<std::int64_t> weights;

    WeightedGame() = default;
    WeightedGame(std::int64_t q, std::vector<std::int64_t> w);

    std::size_t player_count() const { return weights.size(); }
    std::int64_t total_weight() const;
    std::int64_t weight_of(PlayerMask m) const;
};

bool is_winning(const ExplicitGame &game, PlayerMask coalition);
bool is_winning(const WeightedGame &game, PlayerMask coalition);

/// Inclusion-minimal members of a W-form game, as a W^m-form game.
/// A W^m-form input is returned unchanged.
ExplicitGame minimal_winning(const ExplicitGame &game);

/// Brings an arbitrary family to W^m form by discarding non-minimal members.
ExplicitGame normalize_minimal(std::vector<std::string> players, std::vector<PlayerMask> family);

/// Superset closure of the game within P(N). Enumerates 2^n coalitions.
ExplicitGame winning_closure(const ExplicitGame &game, const Limits &limits = {});

/// Inclusion-maximal losing coalitions. Enumerates 2^n coalitions.
std::vector<PlayerMask> maximal_losing(const ExplicitGame &game, const Limits &limits = {});

/// Length, Width, sLength, sWidth; std::nullopt when the defining set is
/// empty. Width is n minus the size of a minimum hitting set of W^m.
std::optional<std::int64_t> explicit_measure(const ExplicitGame &game, MeasureKind kind);

ExplicitGame explicit_combine(const ExplicitGame &a, const ExplicitGame &b, CombineMode mode);

/// Same player set and same winning coalitions.
bool same_game(const ExplicitGame &a, const ExplicitGame &b);

/// Expands a weighted game to W^m form over players named by `names`
/// (defaults to "p:1".."p:n").
ExplicitGame to_explicit(const WeightedGame &game, const Limits &limits = {},
                         std::vector<std::string> names = {});

std::vector<std::string> default_player_names(std::size_t n);

/// Measures derived from each other: sLength from Width and sWidth from
/// Length, given n players.
std::optional<std::int64_t> slength_from_width(std::optional<std::int64_t> width, std::size_t n);
std::optional<std::int64_t> swidth_from_length(std::optional<std::int64_t> length, std::size_t n);

} // namespace igt
