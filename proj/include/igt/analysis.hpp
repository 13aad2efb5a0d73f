#pragma once

#include "igt/game_forms.hpp"
#include "igt/influence_game.hpp"
#include "igt/limits.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, always with a denominator.
std::string format_rational(const Rational &r);
/// Decimal rendering with `digits` fractional digits, truncated toward zero.
std::string format_decimal(const Rational &r, int digits);

enum class PlayerProperty { Passer, Vetoer, Dictator };
enum class GameProperty { Proper, Strong, Decisive };

PlayerProperty parse_player_property(std::string_view s);
GameProperty parse_game_property(std::string_view s);
std::string to_string(GameProperty p);

/// Brute-force measure by size-layered enumeration with early exit.
/// Throws ResourceError above limits.max_players.
std::optional<std::int64_t> measure(const InfluenceGame &game, MeasureKind kind, const Limits &limits = {});

struct PowerReport {
    std::string player;
    BigInt banzhaf_value;
    Rational banzhaf_index;
    BigInt shapley_value;
    Rational shapley_index;
};

PowerReport power(const InfluenceGame &game, std::string_view player, const Limits &limits = {});
/// One report per player, in player order.
std::vector<PowerReport> power_all(const InfluenceGame &game, const Limits &limits = {});

/// Spread tests: |F({i})| >= q, |F(N∖{i})| < q, or both.
bool player_property(const InfluenceGame &game, std::string_view player, PlayerProperty kind);

bool is_dummy(const InfluenceGame &game, std::string_view player, const Limits &limits = {});
bool are_symmetric(const InfluenceGame &game, std::string_view i, std::string_view j, const Limits &limits = {});

/// |F(X)| >= q and |F(X∖{i})| < q. Throws InputError when i ∉ X.
bool is_critical(const InfluenceGame &game, const std::vector<std::string> &team, std::string_view player);
/// |F(N∖X)| < q.
bool is_blocking(const InfluenceGame &game, const std::vector<std::string> &team);
/// X successful with at least one critical member.
bool is_swing(const InfluenceGame &game, const std::vector<std::string> &team);

/// Complementary-pair enumeration over half of P(N).
bool game_property(const InfluenceGame &game, GameProperty kind, const Limits &limits = {});

/// Same successful teams over identical player-id sets.
bool equivalent(const InfluenceGame &a, const InfluenceGame &b, const Limits &limits = {});

/// φ as pairs (player of a, player of b).
using PlayerBijection = std::vector<std::pair<std::string, std::string>>;

/// A witness bijection when the games are isomorphic. Throws ResourceError
/// above limits.iso_players.
std::optional<PlayerBijection> isomorphic(const InfluenceGame &a, const InfluenceGame &b, const Limits &limits = {});

} // namespace igt
