#include "map_builder.hpp"

#include <stdexcept>

#include "detail.hpp"

namespace knot {

int MapBuilder::add_crossing() {
    crossings_.emplace_back();
    return static_cast<int>(crossings_.size()) - 1;
}

void MapBuilder::connect(int c1, int p1, int c2, int p2, long long tag) {
    auto& a = crossings_.at(c1)[p1];
    auto& b = crossings_.at(c2)[p2];
    if (a.peer_crossing >= 0 || b.peer_crossing >= 0)
        throw std::logic_error("MapBuilder: port connected twice");
    int edge = static_cast<int>(edge_tags_.size());
    edge_tags_.push_back(tag);
    a = {c2, p2, edge};
    b = {c1, p1, edge};
}

MapBuilder::Result MapBuilder::build(std::string name, errc err) const {
    int n = static_cast<int>(crossings_.size());
    Result out;
    if (n == 0) {
        out.diagram.name = std::move(name);
        return out;
    }
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < 4; ++p)
            if (crossings_[c][p].peer_crossing < 0)
                throw std::logic_error("MapBuilder: unconnected port");

    // Walk the curve: entering a crossing at port p, the strand leaves at
    // port p+2. Arcs are numbered in traversal order.
    std::vector<int> arc_of_edge(edge_tags_.size(), 0);
    std::vector<std::array<int, 4>> arc_at(n, {0, 0, 0, 0});
    std::vector<std::array<bool, 4>> entered(n, {false, false, false, false});

    int c = 0, p = 0;
    int label = 0;
    do {
        if (entered[c][p])
            fail(err, "wiring does not trace a single closed curve");
        entered[c][p] = true;
        int exit = (p + 2) & 3;
        const Port& port = crossings_[c][exit];
        arc_of_edge[port.edge] = ++label;
        arc_at[c][exit] = label;
        arc_at[port.peer_crossing][port.peer_port] = label;
        c = port.peer_crossing;
        p = port.peer_port;
    } while (!(c == 0 && p == 0));
    if (label != 2 * n)
        fail(err, "wiring traces more than one closed curve");

    std::vector<std::array<int, 4>> tuples(n);
    for (int v = 0; v < n; ++v) {
        int u = entered[v][0] ? 0 : 2;
        if (!entered[v][u])
            fail(err, "crossing never entered on its under axis");
        for (int s = 0; s < 4; ++s)
            tuples[v][s] = arc_at[v][(u + s) & 3];
    }

    try {
        out.diagram = detail::from_tuples(std::move(tuples), std::move(name));
    } catch (const knot_error& e) {
        fail(err, e.what());
    }
    for (size_t e = 0; e < edge_tags_.size(); ++e)
        if (edge_tags_[e] >= 0)
            out.tag_to_arc[edge_tags_[e]] = arc_of_edge[e];
    return out;
}

} // namespace knot
