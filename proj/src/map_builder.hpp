#pragma once

#include <map>
#include <utility>
#include <vector>

#include "knotcalc/diagram.hpp"

namespace knot {

/// Assembles a knot diagram from abstract crossings and port wirings, then
/// walks the curve to assign oriented arc labels and emit a PD tuple list.
///
/// Each crossing has four ports 0..3 in counterclockwise order; the strand
/// through ports 0-2 passes under the strand through ports 1-3. Every port
/// must be connected exactly once. Edges may carry an integer tag; build()
/// reports the arc label each tagged edge received.
class MapBuilder {
public:
    int add_crossing();
    void connect(int c1, int p1, int c2, int p2, long long tag = -1);

    struct Result {
        PlanarDiagram diagram;
        std::map<long long, int> tag_to_arc;
    };

    /// Walks the curve from crossing 0 port 0 and validates the result.
    /// `err` is the error kind raised when the wiring is not a planar knot
    /// diagram (construction bugs surface as NonplanarCode from validation).
    Result build(std::string name = "", errc err = errc::nonplanar_code) const;

private:
    struct Port {
        int peer_crossing = -1;
        int peer_port = -1;
        int edge = -1;
    };
    std::vector<std::array<Port, 4>> crossings_;
    std::vector<long long> edge_tags_;
};

} // namespace knot
