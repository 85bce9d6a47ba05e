#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"
#include "knotcalc/engine.hpp"
#include "knotcalc/laurent.hpp"

namespace knot {

/// Checkerboard coloring of the faces of a connected alternating diagram.
/// The convention shades the faces swept when the over-strand rotates
/// counterclockwise onto the under-strand (tuple corners 1 and 3); it is the
/// unique coloring with sigma(right-handed trefoil) = -2 under
/// sigma = X - n_+ - 1, and it makes the shading-connecting state have
/// exactly X loops. X counts unshaded faces, Y shaded; the zero-crossing
/// unknot has X = Y = 1 by convention.
struct CheckerboardColoring {
    std::vector<bool> shaded; ///< indexed like faces(d)
    int X = 0;
    int Y = 0;
};

CheckerboardColoring checkerboard(const PlanarDiagram& d);

/// Loop count of the state that smooths every crossing so the shaded regions
/// join; equals X for connected alternating diagrams.
int s_zero(const PlanarDiagram& d, const CheckerboardColoring& coloring);

/// Signature of a connected, reduced, alternating knot diagram: X - n_+ - 1
/// (so the right-handed trefoil has signature -2).
int sigma(const PlanarDiagram& d);

/// Maximal Thurston-Bennequin number via Ng's formula m - sigma/2 - 1.
int tb_ng(const PlanarDiagram& d, Engine engine = Engine::automatic,
          const BracketOptions& opts = {});

/// Maximal Thurston-Bennequin number via the writhe formula w - X.
int tb_wx(const PlanarDiagram& d);

/// Aggregate of the alternating-diagram invariants. Fields that require a
/// connected reduced alternating diagram are empty otherwise.
struct InvariantReport {
    std::string name;
    int n = 0;
    int w = 0;
    int nplus = 0;
    std::optional<int> X, Y, s0, sigma, tb, tb_mirror;
    Quarter m;
    QuarterLaurent jones{VarTag::t};

    /// JSON object with stable field names
    /// (n, w, nplus, X, Y, s0, sigma, m, tb, tb_mirror, jones, name).
    std::string to_json() const;
};

InvariantReport invariant_report(const PlanarDiagram& d, Engine engine = Engine::automatic,
                                 const BracketOptions& opts = {});

} // namespace knot
