#include "igt/game_forms.hpp"

#include "igt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace igt {

MeasureKind parse_measure_kind(std::string_view s) {
    if (s == "length")
        return MeasureKind::Length;
    if (s == "width")
        return MeasureKind::Width;
    if (s == "slength")
        return MeasureKind::SLength;
    if (s == "swidth")
        return MeasureKind::SWidth;
    throw InputError("unknown measure kind '" + std::string(s) + "'");
}

std::string to_string(MeasureKind k) {
    switch (k) {
    case MeasureKind::Length:
        return "length";
    case MeasureKind::Width:
        return "width";
    case MeasureKind::SLength:
        return "slength";
    case MeasureKind::SWidth:
        return "swidth";
    }
    return "?";
}

CombineMode parse_combine_mode(std::string_view s) {
    if (s == "union")
        return CombineMode::Union;
    if (s == "intersection")
        return CombineMode::Intersection;
    throw InputError("unknown combine mode '" + std::string(s) + "'");
}

namespace {

void canonical_sort(std::vector<PlayerMask> &family) {
    std::sort(family.begin(), family.end(), [](PlayerMask a, PlayerMask b) {
        const int pa = popcount(a), pb = popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<PlayerMask> minimal_members(std::vector<PlayerMask> family) {
    canonical_sort(family);
    std::vector<PlayerMask> out;
    for (auto s : family) {
        bool dominated = std::any_of(out.begin(), out.end(), [s](PlayerMask m) { return is_subset(m, s); });
        if (!dominated)
            out.push_back(s);
    }
    return out;
}

// Smallest set of players meeting every member of `family`.
void min_hitting_set(const std::vector<PlayerMask> &family, PlayerMask chosen, int &best) {
    const int size = popcount(chosen);
    if (size >= best)
        return;
    PlayerMask pick = 0;
    int pick_size = 65;
    for (auto s : family)
        if ((s & chosen) == 0 && popcount(s) < pick_size) {
            pick = s;
            pick_size = popcount(s);
        }
    if (pick_size == 65) {
        best = size;
        return;
    }
    if (size + 1 >= best)
        return;
    for (auto i : members(pick))
        min_hitting_set(family, chosen | (PlayerMask{1} << i), best);
}

} // namespace

ExplicitGame::ExplicitGame(std::vector<std::string> players, std::vector<PlayerMask> family, FamilyKind kind)
    : players_(std::move(players)), family_(std::move(family)), kind_(kind) {
    const auto n = players_.size();
    if (n > 64)
        throw InputError("explicit games support at most 64 players");
    std::unordered_set<std::string> seen;
    for (const auto &p : players_)
        if (!seen.insert(p).second)
            throw ValidationError("duplicate player id '" + p + "'");
    const PlayerMask all = full_mask(n);
    for (auto s : family_)
        if (!is_subset(s, all))
            throw ValidationError("coalition references a player outside N");
    canonical_sort(family_);

    if (kind_ == FamilyKind::MinimalWinning) {
        for (std::size_t i = 0; i < family_.size(); ++i)
            for (std::size_t j = i + 1; j < family_.size(); ++j)
                if (is_subset(family_[i], family_[j]))
                    throw ValidationError("minimal winning family is not an antichain: {" +
                                          [&] {
                                              std::string s;
                                              for (auto &p : names(family_[i]))
                                                  s += (s.empty() ? "" : ",") + p;
                                              return s;
                                          }() +
                                          "} is contained in another member");
    } else {
        std::unordered_set<PlayerMask> members_set(family_.begin(), family_.end());
        for (auto s : family_)
            for (std::size_t i = 0; i < n; ++i) {
                const PlayerMask bit = PlayerMask{1} << i;
                if (!(s & bit) && !members_set.count(s | bit))
                    throw ValidationError("winning family is not monotonic: a superset of a winning "
                                          "coalition is missing");
            }
    }
}

std::size_t ExplicitGame::position(std::string_view player) const {
    for (std::size_t i = 0; i < players_.size(); ++i)
        if (players_[i] == player)
            return i;
    throw InputError("unknown player '" + std::string(player) + "'");
}

PlayerMask ExplicitGame::mask_of(const std::vector<std::string> &ids) const {
    PlayerMask m = 0;
    for (const auto &id : ids)
        m |= PlayerMask{1} << position(id);
    return m;
}

std::vector<std::string> ExplicitGame::names(PlayerMask m) const {
    std::vector<std::string> out;
    for (auto i : members(m))
        out.push_back(players_[i]);
    return out;
}

WeightedGame::WeightedGame(std::int64_t q, std::vector<std::int64_t> w) : quota(q), weights(std::move(w)) {
    if (quota < 0)
        throw ValidationError("weighted game quota must be non-negative");
    for (auto x : weights)
        if (x < 0)
            throw ValidationError("weighted game weights must be non-negative");
}

std::int64_t WeightedGame::total_weight() const { return std::accumulate(weights.begin(), weights.end(), std::int64_t{0}); }

std::int64_t WeightedGame::weight_of(PlayerMask m) const {
    std::int64_t s = 0;
    for (auto i : members(m))
        s += weights.at(i);
    return s;
}

bool is_winning(const ExplicitGame &game, PlayerMask coalition) {
    if (!is_subset(coalition, full_mask(game.player_count())))
        throw InputError("coalition references a player outside N");
    const auto &f = game.family();
    if (game.kind() == FamilyKind::Winning)
        return std::find(f.begin(), f.end(), coalition) != f.end();
    return std::any_of(f.begin(), f.end(), [coalition](PlayerMask m) { return is_subset(m, coalition); });
}

bool is_winning(const WeightedGame &game, PlayerMask coalition) {
    if (!is_subset(coalition, full_mask(game.player_count())))
        throw InputError("coalition references a player outside N");
    return game.weight_of(coalition) >= game.quota;
}

ExplicitGame minimal_winning(const ExplicitGame &game) {
    if (game.kind() == FamilyKind::MinimalWinning)
        return game;
    std::unordered_set<PlayerMask> w(game.family().begin(), game.family().end());
    std::vector<PlayerMask> out;
    for (auto s : game.family()) {
        bool minimal = true;
        for (auto i : members(s))
            if (w.count(s & ~(PlayerMask{1} << i))) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(s);
    }
    return ExplicitGame(game.players(), std::move(out), FamilyKind::MinimalWinning);
}

ExplicitGame normalize_minimal(std::vector<std::string> players, std::vector<PlayerMask> family) {
    return ExplicitGame(std::move(players), minimal_members(std::move(family)), FamilyKind::MinimalWinning);
}

ExplicitGame winning_closure(const ExplicitGame &game, const Limits &limits) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "winning-family expansion");
    if (game.kind() == FamilyKind::Winning)
        return game;
    std::vector<PlayerMask> out;
    for (PlayerMask s = 0; s <= full_mask(n); ++s)
        if (is_winning(game, s))
            out.push_back(s);
    return ExplicitGame(game.players(), std::move(out), FamilyKind::Winning);
}

std::vector<PlayerMask> maximal_losing(const ExplicitGame &game, const Limits &limits) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "maximal losing enumeration");
    const auto wm = minimal_winning(game);
    std::vector<PlayerMask> out;
    const PlayerMask all = full_mask(n);
    for (PlayerMask s = 0; s <= all; ++s) {
        if (is_winning(wm, s))
            continue;
        bool maximal = true;
        for (auto i : members(all & ~s))
            if (!is_winning(wm, s | (PlayerMask{1} << i))) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(s);
    }
    canonical_sort(out);
    return out;
}

std::optional<std::int64_t> slength_from_width(std::optional<std::int64_t> width, std::size_t n) {
    if (!width)
        return 0;
    if (*width >= static_cast<std::int64_t>(n))
        return std::nullopt;
    return *width + 1;
}

std::optional<std::int64_t> swidth_from_length(std::optional<std::int64_t> length, std::size_t n) {
    if (!length)
        return static_cast<std::int64_t>(n);
    if (*length == 0)
        return std::nullopt;
    return *length - 1;
}

std::optional<std::int64_t> explicit_measure(const ExplicitGame &game, MeasureKind kind) {
    const auto wm = minimal_winning(game);
    const auto &f = wm.family();
    const auto n = game.player_count();

    std::optional<std::int64_t> length;
    if (!f.empty())
        length = popcount(f.front()); // canonical order puts the smallest first

    auto width = [&]() -> std::optional<std::int64_t> {
        if (!f.empty() && f.front() == 0)
            return std::nullopt;
        int best = static_cast<int>(n) + 1;
        min_hitting_set(f, 0, best);
        return static_cast<std::int64_t>(n) - best;
    };

    switch (kind) {
    case MeasureKind::Length:
        return length;
    case MeasureKind::SWidth:
        return swidth_from_length(length, n);
    case MeasureKind::Width:
        return width();
    case MeasureKind::SLength:
        return slength_from_width(width(), n);
    }
    return std::nullopt;
}

namespace {

// Re-expresses b's family over a's player order.
std::vector<PlayerMask> aligned_family(const ExplicitGame &a, const ExplicitGame &b) {
    if (a.player_count() != b.player_count())
        throw InputError("games are over different player sets");
    std::vector<std::size_t> map(b.player_count());
    for (std::size_t i = 0; i < b.player_count(); ++i)
        map[i] = a.position(b.players()[i]);
    const auto wb = minimal_winning(b);
    std::vector<PlayerMask> out;
    for (auto s : wb.family()) {
        PlayerMask m = 0;
        for (auto i : members(s))
            m |= PlayerMask{1} << map[i];
        out.push_back(m);
    }
    return out;
}

} // namespace

ExplicitGame explicit_combine(const ExplicitGame &a, const ExplicitGame &b, CombineMode mode) {
    std::vector<PlayerMask> fb;
    try {
        fb = aligned_family(a, b);
    } catch (const InputError &) {
        throw InputError("explicit_combine: games must have identical player sets");
    }
    const auto fa = minimal_winning(a).family();
    std::vector<PlayerMask> out;
    if (mode == CombineMode::Union) {
        out = fa;
        out.insert(out.end(), fb.begin(), fb.end());
    } else {
        for (auto x : fa)
            for (auto y : fb)
                out.push_back(x | y);
    }
    return normalize_minimal(a.players(), std::move(out));
}

bool same_game(const ExplicitGame &a, const ExplicitGame &b) {
    std::vector<PlayerMask> fb;
    try {
        fb = aligned_family(a, b);
    } catch (const InputError &) {
        return false;
    }
    auto fa = minimal_winning(a).family();
    canonical_sort(fb);
    return fa == fb;
}

std::vector<std::string> default_player_names(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 1; i <= n; ++i)
        out.push_back("p:" + std::to_string(i));
    return out;
}

ExplicitGame to_explicit(const WeightedGame &game, const Limits &limits, std::vector<std::string> names) {
    const auto n = game.player_count();
    require_within(n, limits.max_players, "weighted game expansion");
    if (names.empty())
        names = default_player_names(n);
    if (names.size() != n)
        throw InputError("player name count does not match weight count");
    std::vector<PlayerMask> out;
    for (PlayerMask s = 0; s <= full_mask(n); ++s) {
        if (!is_winning(game, s))
            continue;
        bool minimal = true;
        for (auto i : members(s))
            if (is_winning(game, s & ~(PlayerMask{1} << i))) {
                minimal = false;
                break;
            }
        if (minimal)
            out.push_back(s);
    }
    return ExplicitGame(std::move(names), std::move(out), FamilyKind::MinimalWinning);
}

} // namespace igt
