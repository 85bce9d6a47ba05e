#pragma once

#include <string>

#include "knotcalc/checkerboard.hpp"
#include "knotcalc/diagram.hpp"
#include "knotcalc/engine.hpp"
#include "knotcalc/laurent.hpp"

namespace knot {

/// Kauffman bracket by exhaustive state sum: sum over all 2^n smoothings of
/// A^(a-b) * delta^(loops-1) with delta = -A^2 - A^-2. The oracle engine;
/// refuses diagrams larger than opts.naive_cap.
QuarterLaurent bracket_naive(const PlanarDiagram& d, const BracketOptions& opts = {});

/// Kauffman bracket by tangle contraction: crossings are absorbed in a
/// cut-width-minimizing order while a weighted sum over boundary pairings is
/// maintained. Identical output to bracket_naive on any input where both run.
QuarterLaurent bracket_tl(const PlanarDiagram& d, const BracketOptions& opts = {});

QuarterLaurent bracket(const PlanarDiagram& d, Engine engine = Engine::automatic,
                       const BracketOptions& opts = {});

/// Jones polynomial (-A)^(-3w) <D> with A = t^(-1/4).
QuarterLaurent jones(const PlanarDiagram& d, Engine engine = Engine::automatic,
                     const BracketOptions& opts = {});

/// Minimum t-degree of the Jones polynomial.
Quarter m_invariant(const PlanarDiagram& d, Engine engine = Engine::automatic,
                    const BracketOptions& opts = {});

/// (3w - n - 2X + 2)/4 for a connected, reduced, alternating diagram; equals
/// m_invariant there.
Quarter m_formula(const PlanarDiagram& d, const CheckerboardColoring& coloring);

/// Kauffman's degree bounds for connected reduced alternating diagrams:
/// max deg <D> = n + 2X - 2 and min deg <D> = -n - 2Y + 2.
struct DegreeReport {
    Quarter bracket_max;
    Quarter bracket_min;
    int expected_max = 0;
    int expected_min = 0;
    bool ok() const {
        return bracket_max == quarter_of_int(expected_max) &&
               bracket_min == quarter_of_int(expected_min);
    }
};

DegreeReport degree_theorem_check(const PlanarDiagram& d, const CheckerboardColoring& coloring,
                                  Engine engine = Engine::automatic,
                                  const BracketOptions& opts = {});

} // namespace knot
