#pragma once

#include <string>

#include "knotcalc/diagram.hpp"

namespace knot {

/// Named diagrams: unknot, trefoil (right-handed), trefoil-lh, figure8, and
/// the twist-knot family k3, k5, k7, ... (k<2n+1> has 2n+1 crossings).
PlanarDiagram builtin(const std::string& name);

} // namespace knot
