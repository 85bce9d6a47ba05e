#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotcalc/builtins.hpp"
#include "knotcalc/diagram.hpp"
#include "knotcalc/doubles.hpp"

namespace knot::testing {

/// Connected reduced alternating diagrams the formula modules accept.
inline std::vector<PlanarDiagram> alternating_corpus(int max_family_n = 8) {
    std::vector<PlanarDiagram> out;
    out.push_back(builtin("trefoil"));
    out.push_back(builtin("trefoil-lh"));
    out.push_back(builtin("figure8"));
    for (int n = 1; n <= max_family_n; ++n)
        out.push_back(family_k2n1(n));
    return out;
}

/// Wider mix used for engine-equivalence sweeps; includes non-alternating
/// doubles and blow-up results.
inline std::vector<PlanarDiagram> engine_corpus() {
    std::vector<PlanarDiagram> out = alternating_corpus(5);
    out.push_back(builtin("unknot"));
    out.push_back(parse_pd("X(1,2,2,1)"));
    for (int k : {-2, -1, 0, 1, 2})
        out.push_back(whitehead_double({builtin("unknot"), k}).diagram);
    out.push_back(whitehead_double({builtin("trefoil"), 0}).diagram);
    out.push_back(whitehead_double({builtin("trefoil"), 3}).diagram);
    return out;
}

} // namespace knot::testing
