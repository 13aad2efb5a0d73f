#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace igt {

/// A coalition over at most 64 players, bit i set when player i belongs.
using PlayerMask = std::uint64_t;

inline int popcount(PlayerMask m) { return std::popcount(m); }

inline PlayerMask full_mask(std::size_t n) {
    return n >= 64 ? ~PlayerMask{0} : (PlayerMask{1} << n) - 1;
}

inline bool is_subset(PlayerMask a, PlayerMask b) { return (a & ~b) == 0; }

/// Next k-subset after `m` in colexicographic order (Gosper's hack).
/// Caller stops once the result exceeds full_mask(n).
inline PlayerMask next_same_size(PlayerMask m) {
    PlayerMask c = m & (~m + 1);
    PlayerMask r = m + c;
    return (((r ^ m) >> 2) / c) | r;
}

/// Calls fn(mask) for every k-subset of n players until fn returns false.
/// Returns false if stopped early.
template <typename Fn> bool for_each_subset_of_size(std::size_t n, std::size_t k, Fn &&fn) {
    if (k > n)
        return true;
    if (k == 0)
        return fn(PlayerMask{0});
    const PlayerMask limit = full_mask(n);
    PlayerMask m = full_mask(k);
    while (true) {
        if (!fn(m))
            return false;
        if (m == (limit & ~full_mask(n - k)) || k == n)
            break;
        m = next_same_size(m);
        if (m > limit)
            break;
    }
    return true;
}

inline std::vector<std::size_t> members(PlayerMask m) {
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

} // namespace igt
