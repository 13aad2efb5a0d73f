#include "igt/oracles.hpp"

#include "igt/errors.hpp"

#include <bit>

namespace igt::oracle {

namespace {

void check_graph(const SimpleGraph &g, const Limits &limits) {
    require_within(g.vertex_count(), limits.oracle_elements, "graph oracle");
}

void check_sets(const SetSystem &c, const Limits &limits) {
    require_within(c.sets.size(), limits.oracle_elements, "set-system oracle");
    require_within(c.universe, 63, "set-system universe");
    for (const auto &s : c.sets)
        for (auto e : s)
            if (e < 1 || e > c.universe)
                throw InputError("set element " + std::to_string(e) + " outside the universe 1.." +
                                 std::to_string(c.universe));
}

std::vector<std::uint64_t> set_masks(const SetSystem &c) {
    std::vector<std::uint64_t> out;
    for (const auto &s : c.sets) {
        std::uint64_t m = 0;
        for (auto e : s)
            m |= std::uint64_t{1} << (e - 1);
        out.push_back(m);
    }
    return out;
}

} // namespace

bool is_vertex_cover(const SimpleGraph &g, std::uint64_t vertices) {
    for (auto [u, v] : g.edges())
        if (!((vertices >> u) & 1U) && !((vertices >> v) & 1U))
            return false;
    return true;
}

std::size_t min_vertex_cover(const SimpleGraph &g, const Limits &limits) {
    check_graph(g, limits);
    std::size_t best = g.vertex_count();
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s)
        if (static_cast<std::size_t>(std::popcount(s)) < best && is_vertex_cover(g, s))
            best = static_cast<std::size_t>(std::popcount(s));
    return best;
}

std::uint64_t count_vertex_covers(const SimpleGraph &g, const Limits &limits) {
    check_graph(g, limits);
    std::uint64_t count = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s)
        if (is_vertex_cover(g, s))
            ++count;
    return count;
}

std::size_t max_independent_set(const SimpleGraph &g, const Limits &limits) {
    check_graph(g, limits);
    std::size_t best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.vertex_count()); ++s) {
        bool independent = true;
        for (auto [u, v] : g.edges())
            if (((s >> u) & 1U) && ((s >> v) & 1U)) {
                independent = false;
                break;
            }
        if (independent)
            best = std::max(best, static_cast<std::size_t>(std::popcount(s)));
    }
    return best;
}

std::optional<std::size_t> min_set_cover(const SetSystem &c, const Limits &limits) {
    check_sets(c, limits);
    const auto masks = set_masks(c);
    const std::uint64_t universe = c.universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << c.universe) - 1;
    std::optional<std::size_t> best;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks.size()); ++pick) {
        std::uint64_t covered = 0;
        for (std::size_t j = 0; j < masks.size(); ++j)
            if ((pick >> j) & 1U)
                covered |= masks[j];
        const auto size = static_cast<std::size_t>(std::popcount(pick));
        if (covered == universe && (!best || size < *best))
            best = size;
    }
    return best;
}

std::size_t max_set_packing(const SetSystem &c, const Limits &limits) {
    check_sets(c, limits);
    const auto masks = set_masks(c);
    std::size_t best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << masks.size()); ++pick) {
        std::uint64_t used = 0;
        bool disjoint = true;
        for (std::size_t j = 0; j < masks.size() && disjoint; ++j)
            if ((pick >> j) & 1U) {
                disjoint = (used & masks[j]) == 0;
                used |= masks[j];
            }
        if (disjoint)
            best = std::max(best, static_cast<std::size_t>(std::popcount(pick)));
    }
    return best;
}

Kind parse_kind(std::string_view s) {
    if (s == "min_vertex_cover")
        return Kind::MinVertexCover;
    if (s == "count_vertex_covers")
        return Kind::CountVertexCovers;
    if (s == "min_set_cover")
        return Kind::MinSetCover;
    if (s == "max_set_packing")
        return Kind::MaxSetPacking;
    if (s == "max_independent_set")
        return Kind::MaxIndependentSet;
    throw InputError("unknown oracle kind '" + std::string(s) + "'");
}

} // namespace igt::oracle
