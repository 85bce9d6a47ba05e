#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knot {

/// Integer interval bracketing the Livingston-Naik invariant t_nu, with the
/// provenance of each endpoint. t_nu is only ever bracketed, never computed.
struct TnuInterval {
    int lower = 0;
    int upper = 0;
    std::vector<std::pair<std::string, std::string>> sources; ///< (endpoint, origin)

    friend bool operator==(const TnuInterval& a, const TnuInterval& b) {
        return a.lower == b.lower && a.upper == b.upper;
    }
};

/// TB(K) < t_nu(K) <= -TB(-K); integrality sharpens the left side to
/// TB(K)+1 <= t_nu(K).
TnuInterval ln_bounds(int tb_k, int tb_mirror);

/// Crossing-change recipes (p positive, n negative changes) that make the
/// knot slice.
struct SlicingData {
    std::vector<std::pair<int, int>> pairs;
};

/// Each recipe (p,n) gives -4n <= t_nu <= 4p; the recipes' boxes are
/// intersected.
TnuInterval slicing_bounds(const SlicingData& data);

/// t_nu(K-) <= t_nu(K+) <= t_nu(K-) + 4: maps an interval for K- to one for
/// the knot with one more positive crossing.
TnuInterval crossing_change_propagate(const TnuInterval& interval_minus);

/// The reverse direction: an interval for K+ gives [lower-4, upper] for K-.
TnuInterval crossing_change_reverse(const TnuInterval& interval_plus);

/// Intersection with provenance merge; reports the offending sources when
/// bounds are incompatible.
TnuInterval combine(const std::vector<TnuInterval>& intervals);

struct SlicingStats {
    int us_plus = 0;  ///< min p over recipes
    int us_minus = 0; ///< min n over recipes
    int Us = 0;       ///< min over recipes of max(p,n)
};

SlicingStats slicing_stats(const SlicingData& data);

/// nu(T_{p,q}) = (p-1)(q-1)/2 for coprime p,q > 0.
long long nu_torus(long long p, long long q);

} // namespace knot
