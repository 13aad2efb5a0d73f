#include "igt/limits.hpp"

#include "igt/errors.hpp"

#include <cstdlib>

namespace igt {

Limits Limits::from_env() {
    Limits l;
    if (const char *v = std::getenv("IGT_MAX_PLAYERS")) {
        char *end = nullptr;
        const unsigned long x = std::strtoul(v, &end, 10);
        if (end == v || *end != '\0' || x == 0 || x > 62)
            throw InputError("IGT_MAX_PLAYERS must be an integer in 1..62");
        l.max_players = x;
    }
    return l;
}

void require_within(std::size_t count, std::size_t cap, const std::string &what) {
    if (count > cap)
        throw ResourceError(what + ": " + std::to_string(count) + " exceeds the enumeration cap of " +
                            std::to_string(cap));
}

} // namespace igt
