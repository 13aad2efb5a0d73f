#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igt/analysis.hpp"
#include "igt/constructions.hpp"
#include "igt/errors.hpp"
#include "support/support.hpp"

using namespace igt;

namespace {

InfluenceGame random_small_game(support::Rng &rng, std::size_t max_nodes) {
    support::GameShape shape;
    shape.n = support::uniform(rng, 1, max_nodes);
    shape.directed = support::coin(rng, 0.5);
    shape.max_weight = support::coin(rng, 0.6) ? 1 : 3;
    shape.player_p = 0.75;
    return support::random_game(rng, shape);
}

std::vector<std::string> ids_in(const InfluenceGame &g, PlayerMask m) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < g.player_count(); ++i)
        if ((m >> i) & 1U)
            out.push_back(g.player_id(i));
    return out;
}

PlayerMask map_mask(const InfluenceGame &a, const InfluenceGame &b, const PlayerBijection &phi, PlayerMask m) {
    PlayerMask out = 0;
    for (const auto &[x, y] : phi)
        if ((m >> a.position(x)) & 1U)
            out |= PlayerMask{1} << b.position(y);
    return out;
}

} // namespace

TEST_CASE("rational formatting") {
    CHECK(format_rational(Rational(0)) == "0/1");
    CHECK(format_rational(Rational(4, 8)) == "1/2");
    CHECK(format_rational(Rational(3)) == "3/1");
    CHECK(format_decimal(Rational(2, 3), 3) == "0.666");
    CHECK(format_decimal(Rational(1), 2) == "1.00");
    CHECK(format_decimal(Rational(1, 8), 0) == "0");
}

TEST_CASE("example 3 analysis") {
    const auto g = support::example3();
    CHECK(measure(g, MeasureKind::Length) == 1);
    CHECK(measure(g, MeasureKind::Width) == 2);
    CHECK(measure(g, MeasureKind::SLength) == 3);
    CHECK(measure(g, MeasureKind::SWidth) == 0);

    const auto p = power_all(g);
    REQUIRE(p.size() == 4);
    const std::vector<int> eta{4, 4, 0, 0}, kappa{12, 12, 0, 0};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(p[i].banzhaf_value == eta[i]);
        CHECK(p[i].shapley_value == kappa[i]);
    }
    CHECK(format_rational(p[0].banzhaf_index) == "1/2");
    CHECK(format_rational(p[2].shapley_index) == "0/1");
    CHECK(power(g, "b").banzhaf_value == 4);

    CHECK(player_property(g, "a", PlayerProperty::Passer));
    CHECK_FALSE(player_property(g, "a", PlayerProperty::Vetoer));
    CHECK_FALSE(player_property(g, "a", PlayerProperty::Dictator));
    CHECK(is_dummy(g, "c"));
    CHECK_FALSE(is_dummy(g, "a"));
    CHECK(are_symmetric(g, "a", "b"));
    CHECK(are_symmetric(g, "c", "d"));
    CHECK_FALSE(are_symmetric(g, "a", "c"));
    CHECK(is_critical(g, {"a", "c"}, "a"));
    CHECK_FALSE(is_critical(g, {"a", "b"}, "a"));
    CHECK_THROWS_AS(is_critical(g, {"c"}, "a"), InputError);
    CHECK(is_blocking(g, {"a", "b"}));
    CHECK_FALSE(is_blocking(g, {"a"}));
    CHECK(is_swing(g, {"a", "d"}));
    CHECK_FALSE(is_swing(g, {"a", "b"}));
    CHECK_FALSE(game_property(g, GameProperty::Proper));
    CHECK(game_property(g, GameProperty::Strong));
    CHECK_FALSE(game_property(g, GameProperty::Decisive));
}

TEST_CASE("dictator fixture") {
    // p:1 feeds every other node; the quota needs the whole graph.
    InfluenceGraph::Builder b;
    for (int i = 1; i <= 5; ++i)
        b.add_node("p:" + std::to_string(i), 1);
    for (int i = 2; i <= 5; ++i)
        b.add_edge("p:1", "p:" + std::to_string(i));
    const auto g = InfluenceGame::all_players(std::move(b).build(), 5);
    CHECK(player_property(g, "p:1", PlayerProperty::Dictator));
    const auto r = power(g, "p:1");
    CHECK(r.banzhaf_value == 16);
    CHECK(r.shapley_value == 120);
    CHECK(format_rational(r.shapley_index) == "1/1");
    CHECK(power(g, "p:3").banzhaf_value == 0);
}

TEST_CASE("measures and power agree with the definitions") {
    support::Rng rng(211);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_small_game(rng, 8);
        const auto n = g.player_count();
        const auto t = support::naive_table(g);
        const auto m = support::naive_measures(t, n);
        CHECK(measure(g, MeasureKind::Length) == support::as_optional(m.length));
        CHECK(measure(g, MeasureKind::Width) == support::as_optional(m.width));
        CHECK(measure(g, MeasureKind::SLength) == support::as_optional(m.slength));
        CHECK(measure(g, MeasureKind::SWidth) == support::as_optional(m.swidth));

        if (n > 6)
            continue;
        const auto all = power_all(g);
        BigInt kappa_sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto eta = support::naive_banzhaf(t, n, i);
            const auto kappa = support::naive_shapley(t, n, i);
            CHECK(all[i].player == g.player_id(i));
            CHECK(all[i].banzhaf_value == eta);
            CHECK(all[i].shapley_value == kappa);
            CHECK(all[i].banzhaf_index == Rational(eta, BigInt(1) << (n - 1)));
            CHECK(all[i].shapley_index == Rational(kappa, BigInt(support::factorial(n))));
            const auto single = power(g, g.player_id(i));
            CHECK(single.banzhaf_value == eta);
            CHECK(single.shapley_value == kappa);
            kappa_sum += kappa;
        }
        if (t.back() && !t.front())
            CHECK(kappa_sum == BigInt(support::factorial(n)));
    }
}

TEST_CASE("properties agree with the definitions") {
    support::Rng rng(223);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = random_small_game(rng, 7);
        const auto n = g.player_count();
        const auto t = support::naive_table(g);
        const PlayerMask full = full_mask(n);

        for (std::size_t i = 0; i < n; ++i) {
            const auto id = g.player_id(i);
            const PlayerMask bit = PlayerMask{1} << i;
            const bool passer = t[bit], vetoer = !t[full & ~bit];
            CHECK(player_property(g, id, PlayerProperty::Passer) == passer);
            CHECK(player_property(g, id, PlayerProperty::Vetoer) == vetoer);
            CHECK(player_property(g, id, PlayerProperty::Dictator) == (passer && vetoer));
            CHECK(is_dummy(g, id) == (support::naive_banzhaf(t, n, i) == 0));
            for (std::size_t j = i + 1; j < n; ++j) {
                const PlayerMask bj = PlayerMask{1} << j;
                bool sym = true;
                for (PlayerMask s = 0; s <= full; ++s)
                    if (!(s & bit) && !(s & bj) && t[s | bit] != t[s | bj])
                        sym = false;
                CHECK(are_symmetric(g, id, g.player_id(j)) == sym);
            }
        }

        bool proper = true, strong = true;
        for (PlayerMask s = 0; s <= full; ++s) {
            if (t[s] && t[full & ~s])
                proper = false;
            if (!t[s] && !t[full & ~s])
                strong = false;
        }
        CHECK(game_property(g, GameProperty::Proper) == proper);
        CHECK(game_property(g, GameProperty::Strong) == strong);
        CHECK(game_property(g, GameProperty::Decisive) == (proper && strong));

        for (int rep = 0; rep < 6; ++rep) {
            const PlayerMask s = support::uniform(rng, 0, full);
            const auto team = ids_in(g, s);
            bool any_critical = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (!((s >> i) & 1U))
                    continue;
                const bool crit = t[s] && !t[s & ~(PlayerMask{1} << i)];
                any_critical = any_critical || crit;
                CHECK(is_critical(g, team, g.player_id(i)) == crit);
            }
            CHECK(is_blocking(g, team) == !t[full & ~s]);
            CHECK(is_swing(g, team) == (t[s] && any_critical));
        }
    }
}

TEST_CASE("equivalence and isomorphism") {
    support::Rng rng(227);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = random_small_game(rng, 7);
        const auto n = g.player_count();
        const auto back = from_minimal_winning(to_explicit(g));
        CHECK(equivalent(g, back));
        CHECK(equivalent(back, g));

        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto h = support::relabel(g, perm, "r.");
        const auto phi = isomorphic(g, h);
        REQUIRE(phi.has_value());
        CHECK(phi->size() == n);
        const auto tg = winning_table(g), th = winning_table(h);
        for (PlayerMask m = 0; m < tg.size(); ++m)
            CHECK(tg[m] == th[map_mask(g, h, *phi, m)]);
    }
}

TEST_CASE("non-isomorphic and non-equivalent games") {
    const auto a = vertex_cover_game(graphs::path(4));
    const auto b = vertex_cover_game(graphs::star(3));
    CHECK_FALSE(isomorphic(a, b).has_value());
    CHECK_FALSE(equivalent(a, vertex_cover_game(graphs::cycle(4))));
    CHECK_THROWS_AS(equivalent(a, vertex_cover_game(graphs::path(3))), InputError);
    Limits small;
    small.iso_players = 3;
    CHECK_THROWS_AS(isomorphic(a, a, small), ResourceError);
}

TEST_CASE("enumeration cap") {
    Limits small;
    small.max_players = 3;
    const auto g = vertex_cover_game(graphs::path(5));
    CHECK_THROWS_AS(measure(g, MeasureKind::Length, small), ResourceError);
    CHECK_THROWS_AS(power_all(g, small), ResourceError);
    CHECK_THROWS_AS(game_property(g, GameProperty::Strong, small), ResourceError);
    CHECK_NOTHROW(player_property(g, "1", PlayerProperty::Passer));
}
