#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igt/constructions.hpp"
#include "igt/errors.hpp"
#include "igt/special_influence.hpp"
#include "support/support.hpp"

using namespace igt;
using support::Family;

namespace {

std::vector<std::string> all_names(const SimpleGraph &g) { return g.names(); }

std::vector<std::string> some_names(support::Rng &rng, const SimpleGraph &g) {
    std::vector<std::string> out;
    for (const auto &n : g.names())
        if (support::coin(rng, 0.6))
            out.push_back(n);
    if (out.empty())
        out.push_back(g.names().front());
    return out;
}

// Brute force: can exactly alpha vertices be removed leaving no isolated vertex?
bool removable(const SimpleGraph &g, std::size_t alpha) {
    const auto n = g.vertex_count();
    for (PlayerMask r = 0; r < (PlayerMask{1} << n); ++r) {
        if (static_cast<std::size_t>(std::popcount(r)) != alpha)
            continue;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            if ((r >> v) & 1U)
                continue;
            bool has = false;
            for (auto u : g.neighbours(v))
                if (!((r >> u) & 1U))
                    has = true;
            ok = has;
        }
        if (ok)
            return true;
    }
    return false;
}

const MeasureKind kAllMeasures[] = {MeasureKind::Length, MeasureKind::Width, MeasureKind::SLength,
                                    MeasureKind::SWidth};
const GameProperty kAllProperties[] = {GameProperty::Proper, GameProperty::Strong, GameProperty::Decisive};

} // namespace

TEST_CASE("classification") {
    const auto full = vertex_cover_game(graphs::path(4));
    CHECK(classify(full) == FamilyTag::MaxInfluenceFullSpread);
    CHECK(to_string(classify(full)) == "max_influence_full_spread");
    CHECK(classify(support::family_game(graphs::path(4), Family::Max, 2, all_names(graphs::path(4)))) ==
          FamilyTag::MaxInfluence);
    CHECK(classify(support::family_game(graphs::path(4), Family::Min, 2, all_names(graphs::path(4)))) ==
          FamilyTag::MinInfluence);
    CHECK(classify(support::example3()) == FamilyTag::General);
    CHECK(is_max_influence(full));
    CHECK_FALSE(is_min_influence(full));
}

TEST_CASE("component profile") {
    const auto g = graphs::disjoint_union(graphs::complete(3), graphs::disjoint_union(graphs::path(1), graphs::path(2)));
    const auto game = support::family_game(g, Family::Min, 3, {"1", "4"});
    const auto p = component_profile(game);
    REQUIRE(p.components.size() == 3);
    CHECK(p.components[0].size == 1);
    CHECK(p.components[1].size == 2);
    CHECK(p.components[2].size == 3);
    CHECK(p.isolated == 1);
    CHECK(p.player_weight == 4);
    CHECK(p.components[2].players == 1);
    CHECK_THROWS_AS(component_profile(support::example3()), InputError);
}

TEST_CASE("full-spread max influence on small graphs") {
    const auto tri = vertex_cover_game(graphs::complete(3));
    CHECK(max_game_property(tri, GameProperty::Decisive));
    CHECK(max_width_full_spread(tri) == 1);
    const auto star = vertex_cover_game(graphs::star(3));
    CHECK_FALSE(max_game_property(star, GameProperty::Proper));
    CHECK(max_game_property(star, GameProperty::Strong));
    const auto two = vertex_cover_game(graphs::disjoint_union(graphs::path(2), graphs::path(2)));
    CHECK_FALSE(max_game_property(two, GameProperty::Strong));
    CHECK(game_property(two, GameProperty::Strong) == false);
    const auto empty = vertex_cover_game(graphs::disjoint_union(graphs::path(1), graphs::path(1)));
    CHECK_FALSE(max_width_full_spread(empty).has_value());
    CHECK_THROWS_AS(max_game_property(support::example3(), GameProperty::Proper), InputError);
}

TEST_CASE("can_remove_without_isolating matches brute force") {
    support::Rng rng(307);
    for (int trial = 0; trial < 300; ++trial) {
        const auto n = support::uniform(rng, 2, 10);
        const auto g = support::random_graph_no_isolated(rng, n, support::coin(rng, 0.5) ? 0.15 : 0.4);
        for (std::size_t alpha = 0; alpha <= n + 1; ++alpha)
            CHECK(can_remove_without_isolating(g, alpha) == removable(g, alpha));
    }
    CHECK_THROWS_AS(can_remove_without_isolating(graphs::path(1), 0), InputError);
}

TEST_CASE("special algorithms agree with enumeration") {
    support::Rng rng(311);
    for (int trial = 0; trial < 400; ++trial) {
        const auto n = support::uniform(rng, 1, 10);
        const auto g = support::random_simple_graph(rng, n, support::coin(rng, 0.5) ? 0.2 : 0.45);
        const auto q = static_cast<std::int64_t>(support::uniform(rng, 0, n + 1));

        const auto full = vertex_cover_game(g);
        for (auto p : kAllProperties)
            CHECK(max_game_property(full, p) == game_property(full, p));
        CHECK(max_width_full_spread(full) == measure(full, MeasureKind::Width));

        const auto mx = support::family_game(g, Family::Max, q, all_names(g));
        CHECK(max_width(mx) == measure(mx, MeasureKind::Width));

        const auto mn = support::family_game(g, Family::Min, q, some_names(rng, g));
        for (auto k : kAllMeasures)
            CHECK(min_measure(mn, k) == measure(mn, k));
        for (auto p : kAllProperties)
            CHECK(min_game_property(mn, p) == game_property(mn, p));

        for (const auto &game : {full, mx, mn}) {
            for (auto k : kAllMeasures)
                CHECK(compute_measure(game, k, Method::Auto) == compute_measure(game, k, Method::Brute));
            for (auto p : kAllProperties)
                CHECK(compute_game_property(game, p, Method::Auto) == compute_game_property(game, p, Method::Brute));
        }
    }
}

TEST_CASE("reduced weighted form of a minimum influence game") {
    support::Rng rng(313);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = support::uniform(rng, 1, 9);
        const auto g = support::random_simple_graph(rng, n, 0.25);
        const auto game = support::family_game(g, Family::Min, static_cast<std::int64_t>(support::uniform(rng, 0, n + 1)),
                                               some_names(rng, g));
        const auto w = min_reduced_weighted(game);
        CHECK(w.quota == game.quota());
        CHECK(std::is_sorted(w.weights.rbegin(), w.weights.rend()));
        std::vector<std::int64_t> sizes;
        for (const auto &c : component_profile(game).components)
            if (c.players > 0)
                sizes.push_back(static_cast<std::int64_t>(c.size));
        std::sort(sizes.rbegin(), sizes.rend());
        CHECK(w.weights == sizes);
        CHECK(explicit_measure(to_explicit(w), MeasureKind::Length) == measure(game, MeasureKind::Length));
    }
}

TEST_CASE("method selection") {
    const auto g = support::example3();
    CHECK_THROWS_AS(compute_measure(g, MeasureKind::Length, Method::Special), InputError);
    CHECK_THROWS_AS(compute_game_property(g, GameProperty::Strong, Method::Special), InputError);
    CHECK(compute_measure(g, MeasureKind::Width, Method::Auto) == 2);
    CHECK(parse_method("special") == Method::Special);
    CHECK_THROWS_AS(parse_method("fast"), InputError);

    // Special algorithms run far beyond the enumeration cap.
    const auto big = vertex_cover_game(graphs::cycle(40));
    CHECK(compute_measure(big, MeasureKind::Width, Method::Auto) == 38);
    CHECK(compute_game_property(big, GameProperty::Proper, Method::Special) == false);
    const auto mn = support::family_game(graphs::path(40), Family::Min, 20, all_names(graphs::path(40)));
    CHECK(compute_measure(mn, MeasureKind::Length, Method::Special) == 1);
    CHECK_THROWS_AS(compute_measure(mn, MeasureKind::Length, Method::Brute), ResourceError);
}
