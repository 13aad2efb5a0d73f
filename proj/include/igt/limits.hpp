#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace igt {

/// Caps on exponential work. Every enumeration checks its cap up front and
/// throws ResourceError instead of starting a computation it cannot finish.
struct Limits {
    std::size_t max_players = 20;        // measures, power, properties, to_explicit
    std::size_t combine_validation = 12; // exhaustive check of combine() output
    std::size_t iso_players = 8;         // permutation search in isomorphic()
    std::size_t oracle_elements = 20;    // brute-force combinatorial oracles
    std::int64_t weight_budget = 1 << 20; // sum of weights in pseudo-polynomial constructions

    /// Defaults, with max_players overridden by IGT_MAX_PLAYERS when set.
    static Limits from_env();
};

/// Throws ResourceError when `count > cap`.
void require_within(std::size_t count, std::size_t cap, const std::string &what);

} // namespace igt
