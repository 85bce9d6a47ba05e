#pragma once

#include <string>

#include "knotcalc/errors.hpp"

namespace knot {

enum class Engine { naive, tl, automatic };

struct BracketOptions {
    int naive_cap = 20;      ///< largest diagram bracket_naive accepts
    int tl_width_limit = 40; ///< largest active boundary bracket_tl tolerates
    int shards = 1;          ///< parallel shards for the naive state sum
};

inline Engine parse_engine(const std::string& s) {
    if (s == "naive")
        return Engine::naive;
    if (s == "tl")
        return Engine::tl;
    if (s == "auto")
        return Engine::automatic;
    fail(errc::malformed_code, "unknown engine '" + s + "' (expected naive|tl|auto)");
}

} // namespace knot
