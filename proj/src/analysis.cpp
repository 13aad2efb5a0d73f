#include "igt/analysis.hpp"

#include "igt/errors.hpp"

#include <algorithm>
#include <map>

namespace igt {

std::string format_rational(const Rational &r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string format_decimal(const Rational &r, int digits) {
    BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    BigInt whole = num / den;
    BigInt rest = num % den;
    std::string out = sign + whole.str();
    if (digits > 0) {
        out += '.';
        for (int d = 0; d < digits; ++d) {
            rest *= 10;
            out += static_cast<char>('0' + static_cast<int>(rest / den));
            rest %= den;
        }
    }
    return out;
}

PlayerProperty parse_player_property(std::string_view s) {
    if (s == "passer")
        return PlayerProperty::Passer;
    if (s == "vetoer")
        return PlayerProperty::Vetoer;
    if (s == "dictator")
        return PlayerProperty::Dictator;
    throw InputError("unknown player property '" + std::string(s) + "'");
}

GameProperty parse_game_property(std::string_view s) {
    if (s == "proper")
        return GameProperty::Proper;
    if (s == "strong")
        return GameProperty::Strong;
    if (s == "decisive")
        return GameProperty::Decisive;
    throw InputError("unknown game property '" + std::string(s) + "'");
}

std::string to_string(GameProperty p) {
    switch (p) {
    case GameProperty::Proper:
        return "proper";
    case GameProperty::Strong:
        return "strong";
    case GameProperty::Decisive:
        return "decisive";
    }
    return {};
}

std::optional<std::int64_t> measure(const InfluenceGame &game, MeasureKind kind, const Limits &limits) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "measure enumeration");
    TeamEvaluator eval(game);
    auto any_of_size = [&](std::size_t k, bool winning) {
        bool found = false;
        for_each_subset_of_size(n, k, [&](PlayerMask s) {
            found = eval.wins(s) == winning;
            return !found;
        });
        return found;
    };
    const auto sn = static_cast<std::int64_t>(n);
    switch (kind) {
    case MeasureKind::Length:
        for (std::int64_t k = 0; k <= sn; ++k)
            if (any_of_size(k, true))
                return k;
        return std::nullopt;
    case MeasureKind::Width:
        for (std::int64_t k = sn; k >= 0; --k)
            if (any_of_size(k, false))
                return k;
        return std::nullopt;
    case MeasureKind::SLength:
        for (std::int64_t k = sn; k >= 0; --k)
            if (any_of_size(k, false))
                return k == sn ? std::nullopt : std::optional<std::int64_t>(k + 1);
        return 0;
    case MeasureKind::SWidth:
        for (std::int64_t k = 0; k <= sn; ++k)
            if (any_of_size(k, true))
                return k == 0 ? std::nullopt : std::optional<std::int64_t>(k - 1);
        return sn;
    }
    return std::nullopt;
}

namespace {

BigInt factorial(std::size_t n) {
    BigInt f = 1;
    for (std::size_t i = 2; i <= n; ++i)
        f *= i;
    return f;
}

// swings[i][s]: winning coalitions of size s in which player i is critical.
std::vector<std::vector<std::uint64_t>> swing_counts(const std::vector<char> &table, std::size_t n) {
    std::vector<std::vector<std::uint64_t>> swings(n, std::vector<std::uint64_t>(n + 1, 0));
    for (PlayerMask s = 0; s < table.size(); ++s) {
        if (!table[s])
            continue;
        const auto size = static_cast<std::size_t>(popcount(s));
        for (PlayerMask rest = s; rest; rest &= rest - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(rest));
            if (!table[s & ~(PlayerMask{1} << i)])
                ++swings[i][size];
        }
    }
    return swings;
}

PowerReport report_for(const std::string &player, const std::vector<std::uint64_t> &swings, std::size_t n) {
    PowerReport r;
    r.player = player;
    std::vector<BigInt> fact(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        fact[i] = factorial(i);
    for (std::size_t s = 1; s <= n; ++s) {
        r.banzhaf_value += swings[s];
        r.shapley_value += BigInt(swings[s]) * fact[s - 1] * fact[n - s];
    }
    const BigInt half = n == 0 ? BigInt(1) : BigInt(1) << (n - 1);
    r.banzhaf_index = Rational(r.banzhaf_value, half);
    r.shapley_index = Rational(r.shapley_value, fact[n]);
    return r;
}

} // namespace

PowerReport power(const InfluenceGame &game, std::string_view player, const Limits &limits) {
    const auto i = game.position(player);
    const auto n = game.player_count();
    require_within(n, limits.max_players, "power computation");
    TeamEvaluator eval(game);
    std::vector<std::uint64_t> swings(n + 1, 0);
    const PlayerMask bit = PlayerMask{1} << i;
    const PlayerMask others = full_mask(n) & ~bit;
    // Every subset of the other players, via the standard submask walk.
    for (PlayerMask rest = others;; rest = (rest - 1) & others) {
        if (eval.wins(rest | bit) && !eval.wins(rest))
            ++swings[static_cast<std::size_t>(popcount(rest)) + 1];
        if (rest == 0)
            break;
    }
    return report_for(game.player_id(i), swings, n);
}

std::vector<PowerReport> power_all(const InfluenceGame &game, const Limits &limits) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "power computation");
    const auto table = winning_table(game, limits);
    const auto swings = swing_counts(table, n);
    std::vector<PowerReport> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(report_for(game.player_id(i), swings[i], n));
    return out;
}

bool player_property(const InfluenceGame &game, std::string_view player, PlayerProperty kind) {
    const auto i = game.position(player);
    auto passer = [&] {
        NodeSet s(game.graph().node_count());
        s.insert(game.player_node(i));
        return is_successful(game, s);
    };
    auto vetoer = [&] {
        auto s = game.all_players_set();
        s.erase(game.player_node(i));
        return !is_successful(game, s);
    };
    switch (kind) {
    case PlayerProperty::Passer:
        return passer();
    case PlayerProperty::Vetoer:
        return vetoer();
    case PlayerProperty::Dictator:
        return passer() && vetoer();
    }
    return false;
}

bool is_dummy(const InfluenceGame &game, std::string_view player, const Limits &limits) {
    const auto i = game.position(player);
    const auto n = game.player_count();
    require_within(n, limits.max_players, "dummy test");
    TeamEvaluator eval(game);
    const PlayerMask bit = PlayerMask{1} << i;
    const PlayerMask others = full_mask(n) & ~bit;
    for (PlayerMask rest = others;; rest = (rest - 1) & others) {
        if (eval.wins(rest | bit) && !eval.wins(rest))
            return false;
        if (rest == 0)
            break;
    }
    return true;
}

bool are_symmetric(const InfluenceGame &game, std::string_view i, std::string_view j, const Limits &limits) {
    const auto pi = game.position(i), pj = game.position(j);
    if (pi == pj)
        return true;
    const auto n = game.player_count();
    require_within(n, limits.max_players, "symmetry test");
    TeamEvaluator eval(game);
    const PlayerMask bi = PlayerMask{1} << pi, bj = PlayerMask{1} << pj;
    const PlayerMask others = full_mask(n) & ~bi & ~bj;
    for (PlayerMask rest = others;; rest = (rest - 1) & others) {
        if (eval.wins(rest | bi) != eval.wins(rest | bj))
            return false;
        if (rest == 0)
            break;
    }
    return true;
}

bool is_critical(const InfluenceGame &game, const std::vector<std::string> &team, std::string_view player) {
    auto x = game.team(team);
    const auto v = game.player_node(game.position(player));
    if (!x.contains(v))
        throw InputError("'" + std::string(player) + "' is not a member of the team");
    if (!is_successful(game, x))
        return false;
    x.erase(v);
    return !is_successful(game, x);
}

bool is_blocking(const InfluenceGame &game, const std::vector<std::string> &team) {
    const auto x = game.team(team);
    auto rest = game.all_players_set();
    for (auto v : x.indices())
        rest.erase(v);
    return !is_successful(game, rest);
}

bool is_swing(const InfluenceGame &game, const std::vector<std::string> &team) {
    auto x = game.team(team);
    if (!is_successful(game, x))
        return false;
    for (auto v : x.indices()) {
        x.erase(v);
        const bool loses = !is_successful(game, x);
        x.insert(v);
        if (loses)
            return true;
    }
    return false;
}

bool game_property(const InfluenceGame &game, GameProperty kind, const Limits &limits) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "game property enumeration");
    TeamEvaluator eval(game);
    const PlayerMask all = full_mask(n);
    const bool want_proper = kind != GameProperty::Strong;
    const bool want_strong = kind != GameProperty::Proper;
    // X ranges over masks without the top player, so each pair {X, N∖X}
    // is visited once. With n = 0 the single pair is (∅, ∅).
    const PlayerMask half = n == 0 ? 1 : PlayerMask{1} << (n - 1);
    for (PlayerMask x = 0; x < half; ++x) {
        const bool a = eval.wins(x), b = eval.wins(all & ~x);
        if (want_proper && a && b)
            return false;
        if (want_strong && !a && !b)
            return false;
    }
    return true;
}

namespace {

// Table of `b` re-indexed to `a`'s player order.
std::vector<char> aligned_table(const InfluenceGame &a, const InfluenceGame &b) {
    const auto n = a.player_count();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[i] = b.position(a.player_id(i));
    TeamEvaluator eval(b);
    std::vector<char> table(std::size_t{1} << n);
    for (PlayerMask s = 0; s < table.size(); ++s) {
        PlayerMask t = 0;
        for (PlayerMask r = s; r; r &= r - 1)
            t |= PlayerMask{1} << pos[static_cast<std::size_t>(std::countr_zero(r))];
        table[s] = eval.wins(t) ? 1 : 0;
    }
    return table;
}

} // namespace

bool equivalent(const InfluenceGame &a, const InfluenceGame &b, const Limits &limits) {
    const auto n = a.player_count();
    if (b.player_count() != n)
        throw InputError("equivalence requires identical player sets");
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = b.graph().find(a.player_id(i));
        if (!v || !b.is_player(*v))
            throw InputError("equivalence requires identical player sets");
    }
    require_within(n, limits.max_players, "equivalence test");
    return winning_table(a, limits) == aligned_table(a, b);
}

namespace {

struct PlayerSignature {
    bool passer;
    std::vector<std::uint64_t> winning_by_size; // winning coalitions containing i
    std::vector<std::uint64_t> swings_by_size;
    auto operator<=>(const PlayerSignature &) const = default;
};

std::vector<PlayerSignature> signatures(const std::vector<char> &table, std::size_t n) {
    auto swings = swing_counts(table, n);
    std::vector<PlayerSignature> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
        sig[i].passer = table[PlayerMask{1} << i] != 0;
        sig[i].winning_by_size.assign(n + 1, 0);
        sig[i].swings_by_size = std::move(swings[i]);
    }
    for (PlayerMask s = 0; s < table.size(); ++s)
        if (table[s])
            for (PlayerMask r = s; r; r &= r - 1)
                ++sig[static_cast<std::size_t>(std::countr_zero(r))].winning_by_size[static_cast<std::size_t>(popcount(s))];
    return sig;
}

class IsoSearch {
  public:
    IsoSearch(const std::vector<char> &ta, const std::vector<char> &tb, std::size_t n)
        : ta_(ta), tb_(tb), n_(n), sa_(signatures(ta, n)), sb_(signatures(tb, n)), phi_(n), used_(n, false) {}

    bool run() { return assign(0); }
    const std::vector<std::size_t> &phi() const { return phi_; }

  private:
    // Every coalition of the first k+1 players that contains player k
    // must keep its outcome under the partial map.
    bool consistent(std::size_t k) const {
        const PlayerMask bit = PlayerMask{1} << k;
        const PlayerMask lower = bit - 1;
        for (PlayerMask rest = lower;; rest = (rest - 1) & lower) {
            const PlayerMask s = rest | bit;
            PlayerMask t = 0;
            for (PlayerMask r = s; r; r &= r - 1)
                t |= PlayerMask{1} << phi_[static_cast<std::size_t>(std::countr_zero(r))];
            if (ta_[s] != tb_[t])
                return false;
            if (rest == 0)
                break;
        }
        return true;
    }

    bool assign(std::size_t k) {
        if (k == n_)
            return true;
        for (std::size_t j = 0; j < n_; ++j) {
            if (used_[j] || sa_[k] != sb_[j])
                continue;
            phi_[k] = j;
            used_[j] = true;
            if (consistent(k) && assign(k + 1))
                return true;
            used_[j] = false;
        }
        return false;
    }

    const std::vector<char> &ta_, &tb_;
    std::size_t n_;
    std::vector<PlayerSignature> sa_, sb_;
    std::vector<std::size_t> phi_;
    std::vector<bool> used_;
};

} // namespace

std::optional<PlayerBijection> isomorphic(const InfluenceGame &a, const InfluenceGame &b, const Limits &limits) {
    const auto n = a.player_count();
    if (b.player_count() != n)
        return std::nullopt;
    require_within(n, limits.iso_players, "isomorphism search");
    const auto ta = winning_table(a, limits), tb = winning_table(b, limits);
    if (std::count(ta.begin(), ta.end(), 1) != std::count(tb.begin(), tb.end(), 1))
        return std::nullopt;
    if (n == 0)
        return ta == tb ? std::optional<PlayerBijection>(PlayerBijection{}) : std::nullopt;
    IsoSearch search(ta, tb, n);
    if (!search.run())
        return std::nullopt;
    PlayerBijection out;
    for (std::size_t i = 0; i < n; ++i)
        out.emplace_back(a.player_id(i), b.player_id(search.phi()[i]));
    return out;
}

} // namespace igt
