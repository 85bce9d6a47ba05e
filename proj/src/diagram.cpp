#include "knotcalc/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

#include "detail.hpp"

namespace knot {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int components(int n) {
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (find(i) == i)
                ++k;
        return k;
    }
};

// alpha[h] = the other half-edge carrying the same arc label; h = 4*crossing + slot.
std::vector<int> alpha_map(const std::vector<std::array<int, 4>>& tuples, int arc_count) {
    std::vector<int> first(arc_count + 1, -1);
    std::vector<int> alpha(4 * tuples.size(), -1);
    for (int c = 0; c < static_cast<int>(tuples.size()); ++c) {
        for (int s = 0; s < 4; ++s) {
            int arc = tuples[c][s];
            int h = 4 * c + s;
            if (first[arc] < 0) {
                first[arc] = h;
            } else {
                alpha[h] = first[arc];
                alpha[first[arc]] = h;
            }
        }
    }
    return alpha;
}

int face_count(const std::vector<std::array<int, 4>>& tuples, int arc_count) {
    std::vector<int> alpha = alpha_map(tuples, arc_count);
    std::vector<bool> seen(alpha.size(), false);
    int count = 0;
    for (int h0 = 0; h0 < static_cast<int>(alpha.size()); ++h0) {
        if (seen[h0])
            continue;
        ++count;
        int h = h0;
        do {
            seen[h] = true;
            int a = alpha[h];
            h = (a & ~3) | ((a + 1) & 3);
        } while (h != h0);
    }
    return count;
}

int mod_succ(int arc, int arc_count) { return arc % arc_count + 1; }

// Resolves the direction of the over strand from the label successor rule.
// Diagrams with a single crossing satisfy both successor conditions; there
// the arc at slot 1 is incoming exactly when its other end is the outgoing
// under slot.
bool resolve_over_direction(const std::array<int, 4>& t, int arc_count, int crossing_index) {
    int b = t[1], d = t[3];
    if (arc_count == 2)
        return t[2] == b;
    bool bd = mod_succ(b, arc_count) == d;
    bool db = mod_succ(d, arc_count) == b;
    if (bd == db)
        fail(errc::malformed_code, "crossing " + std::to_string(crossing_index) +
                                       ": over-strand arcs " + std::to_string(b) + "," +
                                       std::to_string(d) + " are not consecutive");
    return bd;
}

PlanarDiagram make_diagram(std::vector<std::array<int, 4>> tuples, std::string name) {
    PlanarDiagram d;
    d.name = std::move(name);
    int n = static_cast<int>(tuples.size());
    d.arc_count = 2 * n;
    if (n == 0)
        return d;

    // Every label in 1..2n appears exactly twice.
    std::vector<int> count(2 * n + 1, 0);
    for (const auto& t : tuples) {
        for (int arc : t) {
            if (arc <= 0)
                fail(errc::malformed_code, "arc label " + std::to_string(arc) + " is not positive");
            if (arc > 2 * n)
                fail(errc::bad_arc_multiplicity,
                     "arc label " + std::to_string(arc) + " exceeds " + std::to_string(2 * n));
            ++count[arc];
        }
    }
    for (int arc = 1; arc <= 2 * n; ++arc)
        if (count[arc] != 2)
            fail(errc::bad_arc_multiplicity, "arc label " + std::to_string(arc) + " appears " +
                                                 std::to_string(count[arc]) + " times, expected 2");

    // Single component: strand passages pair a-c and b-d; the cycles of that
    // pairing are the link components.
    Dsu comp(2 * n);
    for (const auto& t : tuples) {
        comp.unite(t[0] - 1, t[2] - 1);
        comp.unite(t[1] - 1, t[3] - 1);
    }
    if (int k = comp.components(2 * n); k != 1)
        fail(errc::split_or_link_input,
             "diagram has " + std::to_string(k) + " components, expected a knot");

    // Labels follow the orientation.
    for (int c = 0; c < n; ++c) {
        const auto& t = tuples[c];
        if (mod_succ(t[0], 2 * n) != t[2])
            fail(errc::malformed_code,
                 "crossing " + std::to_string(c) + ": under-strand arcs " + std::to_string(t[0]) +
                     "," + std::to_string(t[2]) + " do not follow the orientation");
        resolve_over_direction(t, 2 * n, c);
    }

    if (face_count(tuples, 2 * n) != n + 2)
        fail(errc::nonplanar_code, "Euler check failed: rotation system is not planar");

    d.crossings.resize(n);
    for (int c = 0; c < n; ++c) {
        d.crossings[c].arcs = tuples[c];
        bool bd = resolve_over_direction(tuples[c], 2 * n, c);
        d.crossings[c].sign = bd ? -1 : +1;
    }
    return d;
}

} // namespace

PlanarDiagram parse_pd(const std::string& text) {
    // Strip comment lines, then tokenize X(a,b,c,d) terms.
    std::string body;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        body += line;
        body += ' ';
    }

    std::vector<std::array<int, 4>> tuples;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
            ++i;
    };
    auto expect = [&](char ch) {
        if (i >= body.size() || body[i] != ch)
            fail(errc::malformed_code, std::string("expected '") + ch + "' at position " +
                                           std::to_string(i) + " of PD code");
        ++i;
    };
    auto read_int = [&] {
        skip_ws();
        size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i])))
            ++i;
        if (i == start)
            fail(errc::malformed_code,
                 "expected an arc label at position " + std::to_string(start) + " of PD code");
        try {
            return std::stoi(body.substr(start, i - start));
        } catch (const std::out_of_range&) {
            fail(errc::malformed_code, "arc label out of range in PD code");
        }
    };

    while (true) {
        skip_ws();
        if (i >= body.size())
            break;
        if (body[i] != 'X')
            fail(errc::malformed_code,
                 std::string("unexpected character '") + body[i] + "' in PD code");
        ++i;
        skip_ws();
        expect('(');
        std::array<int, 4> t{};
        for (int k = 0; k < 4; ++k) {
            t[k] = read_int();
            skip_ws();
            if (k < 3)
                expect(',');
        }
        expect(')');
        tuples.push_back(t);
    }
    return make_diagram(std::move(tuples), "");
}

std::string to_pd_string(const PlanarDiagram& d) {
    std::ostringstream os;
    for (int c = 0; c < d.size(); ++c) {
        if (c)
            os << ' ';
        const auto& t = d.crossings[c].arcs;
        os << "X(" << t[0] << ',' << t[1] << ',' << t[2] << ',' << t[3] << ')';
    }
    return os.str();
}

int writhe(const PlanarDiagram& d) {
    int w = 0;
    for (const auto& x : d.crossings)
        w += x.sign;
    return w;
}

int n_plus(const PlanarDiagram& d) {
    int k = 0;
    for (const auto& x : d.crossings)
        k += x.sign > 0;
    return k;
}

bool over_enters_at_b(const PlanarDiagram& d, const Crossing& x) {
    return resolve_over_direction(x.arcs, d.arc_count, 0);
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    // Swapping over and under rotates each tuple to start at the old
    // incoming over-strand.
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(d.crossings.size());
    for (const auto& x : d.crossings) {
        const auto& t = x.arcs;
        if (over_enters_at_b(d, x))
            tuples.push_back({t[1], t[2], t[3], t[0]});
        else
            tuples.push_back({t[3], t[0], t[1], t[2]});
    }
    return make_diagram(std::move(tuples), d.name.empty() ? "" : d.name + "-mirror");
}

PlanarDiagram reverse(const PlanarDiagram& d) {
    int m = d.arc_count;
    auto r = [m](int arc) { return m + 1 - arc; };
    std::vector<std::array<int, 4>> tuples;
    tuples.reserve(d.crossings.size());
    for (const auto& x : d.crossings) {
        const auto& t = x.arcs;
        tuples.push_back({r(t[2]), r(t[3]), r(t[0]), r(t[1])});
    }
    return make_diagram(std::move(tuples), d.name.empty() ? "" : d.name + "-reverse");
}

bool is_alternating(const PlanarDiagram& d) {
    if (d.size() == 0)
        return true;
    // Alternating iff every arc has one under end (slot 0 or 2) and one over
    // end (slot 1 or 3).
    std::vector<int> under_ends(d.arc_count + 1, 0);
    for (const auto& x : d.crossings) {
        ++under_ends[x.arcs[0]];
        ++under_ends[x.arcs[2]];
    }
    for (int arc = 1; arc <= d.arc_count; ++arc)
        if (under_ends[arc] != 1)
            return false;
    return true;
}

bool is_reduced(const PlanarDiagram& d) {
    for (const auto& f : faces(d)) {
        for (size_t i = 0; i < f.corners.size(); ++i)
            for (size_t j = i + 1; j < f.corners.size(); ++j)
                if (f.corners[i].first == f.corners[j].first &&
                    (f.corners[i].second + 2) % 4 == f.corners[j].second)
                    return false;
    }
    return true;
}

bool is_connected(const PlanarDiagram& d) {
    int n = d.size();
    if (n <= 1)
        return true;
    std::vector<int> owner(d.arc_count + 1, -1);
    Dsu dsu(n);
    for (int c = 0; c < n; ++c) {
        for (int arc : d.crossings[c].arcs) {
            if (owner[arc] < 0)
                owner[arc] = c;
            else
                dsu.unite(owner[arc], c);
        }
    }
    return dsu.components(n) == 1;
}

std::vector<Face> faces(const PlanarDiagram& d) {
    int n = d.size();
    if (n == 0)
        return {Face{}, Face{}};
    std::vector<std::array<int, 4>> tuples(n);
    for (int c = 0; c < n; ++c)
        tuples[c] = d.crossings[c].arcs;
    std::vector<int> alpha = alpha_map(tuples, d.arc_count);

    std::vector<Face> out;
    std::vector<bool> seen(alpha.size(), false);
    for (int h0 = 0; h0 < static_cast<int>(alpha.size()); ++h0) {
        if (seen[h0])
            continue;
        Face f;
        int h = h0;
        do {
            seen[h] = true;
            int a = alpha[h];
            f.corners.emplace_back(a >> 2, a & 3);
            h = (a & ~3) | ((a + 1) & 3);
        } while (h != h0);
        out.push_back(std::move(f));
    }
    return out;
}

PlanarDiagram parse_dt(const std::string& text) {
    std::vector<long long> entries;
    {
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            try {
                size_t used = 0;
                long long v = std::stoll(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
                entries.push_back(v);
            } catch (const std::exception&) {
                fail(errc::malformed_code, "bad DT entry '" + tok + "'");
            }
        }
    }
    int n = static_cast<int>(entries.size());
    if (n == 0)
        return PlanarDiagram{};
    if (n > 20)
        fail(errc::too_large, "DT realization supports at most 20 crossings");

    std::vector<int> partner(2 * n + 1, 0); // position -> paired position
    std::vector<bool> even_seen(2 * n + 1, false);
    std::vector<bool> even_is_over(n, false);
    for (int i = 0; i < n; ++i) {
        long long v = entries[i];
        long long mag = v < 0 ? -v : v;
        if (mag % 2 != 0 || mag < 2 || mag > 2 * n)
            fail(errc::malformed_code, "DT entry " + std::to_string(v) +
                                           " is not a signed even integer in range");
        if (even_seen[mag])
            fail(errc::malformed_code, "DT entry " + std::to_string(mag) + " repeated");
        even_seen[mag] = true;
        partner[2 * i + 1] = static_cast<int>(mag);
        partner[mag] = 2 * i + 1;
        // positive entry: the even passage runs under; all-positive
        // alternating codes then realize with the chirality that matches the
        // built-in right-handed trefoil for "4 6 2"
        even_is_over[i] = v < 0;
    }

    auto in_arc = [n](int pos) { return pos == 1 ? 2 * n : pos - 1; };

    // Each crossing has one free binary choice: how the even passage is
    // rotated against the odd one. Planarity (the Euler check) is the
    // arbiter; the first assignment that realizes on S^2 wins, which makes
    // the output deterministic.
    std::vector<std::array<int, 4>> tuples(n);
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        for (int i = 0; i < n; ++i) {
            int o = 2 * i + 1;
            int e = partner[o];
            bool bit = (mask >> i) & 1;
            int o_in = in_arc(o), o_out = o;
            int e_in = in_arc(e), e_out = e;
            if (!even_is_over[i]) {
                tuples[i] = bit ? std::array<int, 4>{e_in, o_in, e_out, o_out}
                                : std::array<int, 4>{e_in, o_out, e_out, o_in};
            } else {
                tuples[i] = bit ? std::array<int, 4>{o_in, e_out, o_out, e_in}
                                : std::array<int, 4>{o_in, e_in, o_out, e_out};
            }
        }
        if (face_count(tuples, 2 * n) == n + 2)
            return make_diagram(std::move(tuples), "");
    }
    fail(errc::unrealizable_code, "DT code has no planar realization");
}

namespace detail {

PlanarDiagram from_tuples(std::vector<std::array<int, 4>> tuples, std::string name) {
    return make_diagram(std::move(tuples), std::move(name));
}

std::vector<int> half_edge_partners(const PlanarDiagram& d) {
    std::vector<std::array<int, 4>> tuples(d.size());
    for (int c = 0; c < d.size(); ++c)
        tuples[c] = d.crossings[c].arcs;
    return alpha_map(tuples, d.arc_count);
}

void require_alternating_formulas(const PlanarDiagram& d) {
    if (d.size() == 0)
        return;
    if (!is_connected(d))
        fail(errc::split_or_link_input, "diagram is not connected");
    if (!is_alternating(d))
        fail(errc::not_alternating, "formula requires an alternating diagram");
    if (!is_reduced(d))
        fail(errc::not_reduced, "formula requires a reduced diagram");
}

} // namespace detail

} // namespace knot
