#pragma once

#include <array>
#include <string>
#include <vector>

#include "knotcalc/diagram.hpp"

namespace knot::detail {

/// Validating constructor shared by the parsers and the diagram builders.
PlanarDiagram from_tuples(std::vector<std::array<int, 4>> tuples, std::string name);

/// partner[h] = the other half-edge carrying the same arc; h = 4*crossing + slot.
std::vector<int> half_edge_partners(const PlanarDiagram& d);

/// Fails unless d is a connected, reduced, alternating knot diagram or the
/// zero-crossing unknot.
void require_alternating_formulas(const PlanarDiagram& d);

} // namespace knot::detail
