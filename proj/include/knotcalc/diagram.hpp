#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "knotcalc/errors.hpp"

namespace knot {

/// One crossing of a planar diagram. arcs = (a,b,c,d) lists the incident arc
/// labels counterclockwise, starting at the incoming under-strand; the
/// under-strand runs a -> c. sign is derived from the orientation rule.
struct Crossing {
    std::array<int, 4> arcs{};
    int sign = 0;
};

/// A complementary region of the diagram. Corners are (crossing, k) pairs
/// where corner k is the wedge between tuple slots k and k+1 (mod 4).
struct Face {
    std::vector<std::pair<int, int>> corners;
};

/// Planar diagram of a knot, arcs labeled 1..2n along the orientation.
/// A zero-crossing diagram is the canonical unknot. Values are immutable
/// after construction; all operations below are pure functions.
struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int arc_count = 0;
    std::string name;

    int size() const { return static_cast<int>(crossings.size()); }
    /// Successor of an arc label along the knot orientation.
    int succ(int arc) const { return arc % arc_count + 1; }
};

/// Parse a PD code: whitespace-separated terms X(a,b,c,d); '#' starts a
/// comment line; the empty string is the unknot. Validates arc
/// multiplicities, single-component structure, orientation consistency and
/// planarity (Euler check).
PlanarDiagram parse_pd(const std::string& text);

/// Parse a Dowker-Thistlethwaite code (whitespace-separated signed even
/// integers) and realize it as a planar diagram.
PlanarDiagram parse_dt(const std::string& text);

/// Serialize back to PD code; parse_pd(to_pd_string(D)) reproduces the
/// crossing list exactly.
std::string to_pd_string(const PlanarDiagram& d);

int writhe(const PlanarDiagram& d);
int n_plus(const PlanarDiagram& d);

/// True if the over strand enters the tuple at slot 1 (b) and leaves at
/// slot 3 (d); false means it runs d -> b.
bool over_enters_at_b(const PlanarDiagram& d, const Crossing& x);

PlanarDiagram mirror(const PlanarDiagram& d);
PlanarDiagram reverse(const PlanarDiagram& d);

bool is_alternating(const PlanarDiagram& d);
bool is_reduced(const PlanarDiagram& d);
bool is_connected(const PlanarDiagram& d);

/// Faces of the diagram on S^2, computed from the rotation system.
/// A connected n-crossing diagram has exactly n+2 faces.
std::vector<Face> faces(const PlanarDiagram& d);

} // namespace knot
