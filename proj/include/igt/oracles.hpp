#pragma once

#include "igt/limits.hpp"
#include "igt/simple_graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace igt {

/// A collection C_1..C_m over the universe {1..universe}. Members may repeat.
struct SetSystem {
    std::size_t universe = 0;
    std::vector<std::vector<std::size_t>> sets;
};

/// Exhaustive solvers that share no code with the game engine. Each
/// enumerates subsets of the vertices or of the collection and throws
/// ResourceError above limits.oracle_elements.
namespace oracle {

bool is_vertex_cover(const SimpleGraph &g, std::uint64_t vertices);
std::size_t min_vertex_cover(const SimpleGraph &g, const Limits &limits = {});
std::uint64_t count_vertex_covers(const SimpleGraph &g, const Limits &limits = {});
std::size_t max_independent_set(const SimpleGraph &g, const Limits &limits = {});
/// none when the sets do not cover the universe.
std::optional<std::size_t> min_set_cover(const SetSystem &c, const Limits &limits = {});
std::size_t max_set_packing(const SetSystem &c, const Limits &limits = {});

enum class Kind { MinVertexCover, CountVertexCovers, MinSetCover, MaxSetPacking, MaxIndependentSet };
Kind parse_kind(std::string_view s);

} // namespace oracle

} // namespace igt
