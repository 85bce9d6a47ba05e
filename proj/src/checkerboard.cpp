#include "knotcalc/checkerboard.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"

#include "knotcalc/bracket.hpp"
#include "detail.hpp"

namespace knot {

CheckerboardColoring checkerboard(const PlanarDiagram& d) {
    CheckerboardColoring col;
    if (d.size() == 0) {
        col.shaded = {true, false};
        col.X = col.Y = 1;
        return col;
    }
    if (!is_connected(d))
        fail(errc::split_or_link_input, "checkerboard coloring needs a connected diagram");
    if (!is_alternating(d))
        fail(errc::not_alternating, "checkerboard coloring in this convention needs an alternating diagram");

    // Corners at odd tuple slots are the shaded wedges. For an alternating
    // diagram every face sees corners of a single parity.
    std::vector<Face> fs = faces(d);
    col.shaded.resize(fs.size());
    for (size_t i = 0; i < fs.size(); ++i) {
        bool any_odd = false, any_even = false;
        for (const auto& [c, k] : fs[i].corners)
            (k % 2 ? any_odd : any_even) = true;
        if (any_odd && any_even)
            fail(errc::not_two_colorable, "face " + std::to_string(i) +
                                              " mixes shaded and unshaded corners");
        col.shaded[i] = any_odd;
    }
    for (bool s : col.shaded)
        (s ? col.Y : col.X) += 1;
    return col;
}

int s_zero(const PlanarDiagram& d, const CheckerboardColoring&) {
    int n = d.size();
    if (n == 0)
        return 1;
    // Smooth every crossing joining the shaded corners: this is the smoothing
    // that pairs tuple slots (0,1) and (2,3). Loops are the components of the
    // resulting strand fragments.
    std::vector<int> parent(4 * n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int c = 0; c < n; ++c) {
        unite(4 * c + 0, 4 * c + 1);
        unite(4 * c + 2, 4 * c + 3);
    }
    std::vector<int> alpha = detail::half_edge_partners(d);
    for (int h = 0; h < 4 * n; ++h)
        unite(h, alpha[h]);
    int loops = 0;
    for (int h = 0; h < 4 * n; ++h)
        loops += find(h) == h;
    return loops;
}

int sigma(const PlanarDiagram& d) {
    if (d.size() == 0)
        return 0;
    detail::require_alternating_formulas(d);
    return checkerboard(d).X - n_plus(d) - 1;
}

int tb_ng(const PlanarDiagram& d, Engine engine, const BracketOptions& opts) {
    detail::require_alternating_formulas(d);
    Quarter m = m_invariant(d, engine, opts);
    int s = sigma(d);
    // m - sigma/2 - 1 as an exact integer
    int num = m.num - 2 * s - 4;
    Quarter result{num};
    if (!result.is_integer())
        fail(errc::non_integer_result, "tb via Ng's formula is not an integer: " + result.str());
    return result.as_integer();
}

int tb_wx(const PlanarDiagram& d) {
    detail::require_alternating_formulas(d);
    return writhe(d) - checkerboard(d).X;
}

InvariantReport invariant_report(const PlanarDiagram& d, Engine engine,
                                 const BracketOptions& opts) {
    InvariantReport rep;
    rep.name = d.name;
    rep.n = d.size();
    rep.w = writhe(d);
    rep.nplus = n_plus(d);
    rep.jones = jones(d, engine, opts);
    rep.m = rep.jones.min_degree();

    bool formulas = d.size() == 0 || (is_connected(d) && is_alternating(d) && is_reduced(d));
    if (formulas) {
        CheckerboardColoring col = checkerboard(d);
        rep.X = col.X;
        rep.Y = col.Y;
        rep.s0 = s_zero(d, col);
        rep.sigma = knot::sigma(d);
        rep.tb = tb_wx(d);
        rep.tb_mirror = tb_wx(mirror(d));
    }
    return rep;
}

std::string InvariantReport::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n;
    j["w"] = w;
    j["nplus"] = nplus;
    auto put = [&](const char* key, const std::optional<int>& v) {
        if (v)
            j[key] = *v;
        else
            j[key] = nullptr;
    };
    put("X", X);
    put("Y", Y);
    put("s0", s0);
    put("sigma", sigma);
    if (m.is_integer())
        j["m"] = m.as_integer();
    else
        j["m"] = m.str();
    put("tb", tb);
    put("tb_mirror", tb_mirror);
    j["jones"] = jones.str();
    if (name.empty())
        j["name"] = nullptr;
    else
        j["name"] = name;
    return j.dump();
}

} // namespace knot
