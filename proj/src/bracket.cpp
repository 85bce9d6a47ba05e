#include "knotcalc/bracket.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <map>
#include <numeric>
#include <vector>

#include "detail.hpp"

namespace knot {

namespace {

QuarterLaurent delta_poly() {
    auto d = QuarterLaurent::int_monomial(VarTag::A, -1, 2);
    d += QuarterLaurent::int_monomial(VarTag::A, -1, -2);
    return d;
}

std::vector<QuarterLaurent> delta_powers(int up_to) {
    std::vector<QuarterLaurent> pows;
    pows.push_back(QuarterLaurent::one(VarTag::A));
    QuarterLaurent delta = delta_poly();
    for (int i = 1; i <= up_to; ++i)
        pows.push_back(pows.back() * delta);
    return pows;
}

// counts[(n - popcount)*(n+1) + loops-1] = number of states with that
// exponent row and loop count; 2^n states fit comfortably in 64 bits.
std::vector<unsigned long long> count_states(const PlanarDiagram& d, const std::vector<int>& alpha,
                                             unsigned long long lo, unsigned long long hi) {
    int n = d.size();
    std::vector<unsigned long long> counts(static_cast<size_t>(n + 1) * (n + 1), 0);
    std::vector<int> parent(4 * n);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (unsigned long long mask = lo; mask < hi; ++mask) {
        std::iota(parent.begin(), parent.end(), 0);
        auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
        for (int c = 0; c < n; ++c) {
            if ((mask >> c) & 1) {
                unite(4 * c + 1, 4 * c + 2);
                unite(4 * c + 3, 4 * c + 0);
            } else {
                unite(4 * c + 0, 4 * c + 1);
                unite(4 * c + 2, 4 * c + 3);
            }
        }
        for (int h = 0; h < 4 * n; ++h)
            unite(h, alpha[h]);
        int loops = 0;
        for (int h = 0; h < 4 * n; ++h)
            loops += find(h) == h;
        int row = n - std::popcount(mask);
        counts[static_cast<size_t>(row) * (n + 1) + (loops - 1)] += 1;
    }
    return counts;
}

} // namespace

QuarterLaurent bracket_naive(const PlanarDiagram& d, const BracketOptions& opts) {
    int n = d.size();
    if (n == 0)
        return QuarterLaurent::one(VarTag::A);
    if (n > opts.naive_cap || n > 62)
        fail(errc::too_large, "diagram has " + std::to_string(n) + " crossings, naive cap is " +
                                  std::to_string(std::min(opts.naive_cap, 62)) +
                                  " (use the tl engine)");

    std::vector<int> alpha = detail::half_edge_partners(d);
    unsigned long long total = 1ull << n;
    int shards = std::max(1, opts.shards);
    std::vector<unsigned long long> counts;
    if (shards == 1 || total < 1024) {
        counts = count_states(d, alpha, 0, total);
    } else {
        // Deterministic by construction: shard tables are summed in index
        // order and addition of exact counts is associative.
        std::vector<std::future<std::vector<unsigned long long>>> jobs;
        for (int s = 0; s < shards; ++s) {
            unsigned long long lo = total / shards * s + std::min<unsigned long long>(s, total % shards);
            unsigned long long hi = lo + total / shards + (static_cast<unsigned long long>(s) < total % shards ? 1 : 0);
            jobs.push_back(std::async(std::launch::async,
                                      [&, lo, hi] { return count_states(d, alpha, lo, hi); }));
        }
        counts.assign(static_cast<size_t>(n + 1) * (n + 1), 0);
        for (auto& job : jobs) {
            auto part = job.get();
            for (size_t i = 0; i < counts.size(); ++i)
                counts[i] += part[i];
        }
    }

    std::vector<QuarterLaurent> dpow = delta_powers(n);
    QuarterLaurent acc(VarTag::A);
    for (int row = 0; row <= n; ++row) {
        int e = 2 * row - n; // exponent a - b
        for (int l = 0; l <= n; ++l) {
            unsigned long long c = counts[static_cast<size_t>(row) * (n + 1) + l];
            if (c)
                acc += dpow[l].scaled(mpz_class(static_cast<unsigned long>(c)), quarter_of_int(e));
        }
    }
    return acc;
}

namespace {

// One contraction step: which crossing is absorbed and how each of its four
// tuple slots connects to the existing boundary.
struct TlStep {
    enum class Act { dangle, cut, to_old, to_slot };
    int crossing = 0;
    std::array<Act, 4> act{};
    std::array<int, 4> arg{}; // to_old: old boundary index; to_slot: other slot
    std::vector<int> keep;    // old boundary index -> new index (-1 if consumed)
    std::array<int, 4> slot_new{}; // slot -> new boundary index (-1 if consumed)
    int width_before = 0;
    int width_after = 0;
};

struct TlPlan {
    std::vector<TlStep> steps;
    int max_width = 0;
};

TlPlan make_plan(const PlanarDiagram& d, int width_limit) {
    int n = d.size();
    std::vector<int> alpha = detail::half_edge_partners(d);
    auto other_end = [&](int c, int s) {
        int h = alpha[4 * c + s];
        return std::pair<int, int>(h >> 2, h & 3);
    };
    auto endpoint_index = [&](int c, int s) {
        // 0 if (c,s) is the first occurrence of its arc, else 1
        int h = 4 * c + s;
        return alpha[h] < h ? 1 : 0;
    };

    // Greedy contraction order, smallest resulting boundary first.
    std::vector<bool> processed(n, false);
    std::vector<int> order;
    int width = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1, best_dw = 0;
        for (int c = 0; c < n; ++c) {
            if (processed[c])
                continue;
            int dw = 0;
            for (int s = 0; s < 4; ++s) {
                auto [c2, s2] = other_end(c, s);
                if (c2 == c)
                    continue;
                dw += processed[c2] ? -1 : +1;
            }
            if (best < 0 || dw < best_dw) {
                best = c;
                best_dw = dw;
            }
        }
        order.push_back(best);
        processed[best] = true;
        width += best_dw;
    }

    // The knot is cut open at one arc so the final strand never closes; the
    // two cut ends stay on the boundary for the whole sweep.
    int cut_c = order[0];
    int cut_arc = d.crossings[cut_c].arcs[0];

    auto key_of = [&](int arc, int end) { return static_cast<long long>(arc) * 2 + end; };
    // cut halves get keys 0 and 1, below every dangling key

    TlPlan plan;
    std::fill(processed.begin(), processed.end(), false);
    std::vector<long long> active; // sorted keys
    for (int c : order) {
        TlStep st;
        st.crossing = c;
        st.width_before = static_cast<int>(active.size());
        std::vector<long long> next = active;
        std::vector<long long> consumed;
        for (int s = 0; s < 4; ++s) {
            int arc = d.crossings[c].arcs[s];
            auto [c2, s2] = other_end(c, s);
            if (arc == cut_arc) {
                st.act[s] = TlStep::Act::cut;
                st.arg[s] = endpoint_index(c, s);
                next.push_back(st.arg[s]);
            } else if (c2 == c) {
                st.act[s] = TlStep::Act::to_slot;
                st.arg[s] = s2;
            } else if (processed[c2]) {
                long long key = key_of(arc, endpoint_index(c2, s2));
                auto it = std::find(active.begin(), active.end(), key);
                st.act[s] = TlStep::Act::to_old;
                st.arg[s] = static_cast<int>(it - active.begin());
                consumed.push_back(key);
            } else {
                st.act[s] = TlStep::Act::dangle;
                long long key = key_of(arc, endpoint_index(c, s));
                st.arg[s] = 0; // filled below once the layout is sorted
                next.push_back(key);
            }
        }
        for (long long key : consumed)
            next.erase(std::find(next.begin(), next.end(), key));
        std::sort(next.begin(), next.end());

        auto new_index = [&](long long key) {
            return static_cast<int>(std::lower_bound(next.begin(), next.end(), key) - next.begin());
        };
        st.keep.assign(active.size(), -1);
        for (size_t i = 0; i < active.size(); ++i) {
            if (std::find(consumed.begin(), consumed.end(), active[i]) == consumed.end())
                st.keep[i] = new_index(active[i]);
        }
        for (int s = 0; s < 4; ++s) {
            switch (st.act[s]) {
                case TlStep::Act::cut:
                    st.slot_new[s] = new_index(st.arg[s]);
                    break;
                case TlStep::Act::dangle:
                    st.slot_new[s] = new_index(key_of(d.crossings[c].arcs[s], endpoint_index(c, s)));
                    break;
                default:
                    st.slot_new[s] = -1;
            }
        }
        st.width_after = static_cast<int>(next.size());
        plan.max_width = std::max(plan.max_width, st.width_after);
        if (st.width_after > width_limit)
            fail(errc::resource_exhausted,
                 "contraction boundary reached " + std::to_string(st.width_after) +
                     " strands, limit is " + std::to_string(width_limit));
        active = std::move(next);
        processed[c] = true;
        plan.steps.push_back(std::move(st));
    }
    return plan;
}

} // namespace

QuarterLaurent bracket_tl(const PlanarDiagram& d, const BracketOptions& opts) {
    int n = d.size();
    if (n == 0)
        return QuarterLaurent::one(VarTag::A);

    TlPlan plan = make_plan(d, opts.tl_width_limit);
    std::vector<QuarterLaurent> dpow = delta_powers(2);

    using State = std::vector<int8_t>;
    std::map<State, QuarterLaurent> states;
    states.emplace(State{}, QuarterLaurent::one(VarTag::A));

    std::vector<int> link1, link2;
    std::vector<int8_t> visited;
    for (const TlStep& st : plan.steps) {
        int wo = st.width_before;
        std::map<State, QuarterLaurent> out;
        for (const auto& [match, weight] : states) {
            for (int smoothing = 0; smoothing < 2; ++smoothing) {
                link1.assign(wo + 4, -1);
                link2.assign(wo + 4, -1);
                for (int i = 0; i < wo; ++i)
                    link1[i] = match[i];
                if (smoothing == 0) { // A: join slots (0,1) and (2,3)
                    link1[wo + 0] = wo + 1;
                    link1[wo + 1] = wo + 0;
                    link1[wo + 2] = wo + 3;
                    link1[wo + 3] = wo + 2;
                } else { // B: join slots (1,2) and (3,0)
                    link1[wo + 1] = wo + 2;
                    link1[wo + 2] = wo + 1;
                    link1[wo + 3] = wo + 0;
                    link1[wo + 0] = wo + 3;
                }
                for (int s = 0; s < 4; ++s) {
                    if (st.act[s] == TlStep::Act::to_old) {
                        link2[wo + s] = st.arg[s];
                        link2[st.arg[s]] = wo + s;
                    } else if (st.act[s] == TlStep::Act::to_slot && s < st.arg[s]) {
                        link2[wo + s] = wo + st.arg[s];
                        link2[wo + st.arg[s]] = wo + s;
                    }
                }

                auto new_index = [&](int node) {
                    return node < wo ? st.keep[node] : st.slot_new[node - wo];
                };

                State next(st.width_after, -1);
                visited.assign(wo + 4, 0);
                for (int start = 0; start < wo + 4; ++start) {
                    if (visited[start] || link2[start] >= 0)
                        continue; // degree-2 nodes are interior or in loops
                    // Chase the chain from one boundary endpoint to the other.
                    visited[start] = 1;
                    int prev = start, cur = link1[start];
                    while (link2[cur] >= 0) {
                        visited[cur] = 1;
                        int nxt = link1[cur] == prev ? link2[cur] : link1[cur];
                        prev = cur;
                        cur = nxt;
                    }
                    visited[cur] = 1;
                    int a = new_index(start), b = new_index(cur);
                    next[a] = static_cast<int8_t>(b);
                    next[b] = static_cast<int8_t>(a);
                }
                int loops = 0;
                for (int start = 0; start < wo + 4; ++start) {
                    if (visited[start])
                        continue;
                    ++loops;
                    int prev = start, cur = link1[start];
                    visited[start] = 1;
                    while (cur != start) {
                        visited[cur] = 1;
                        int nxt = link1[cur] == prev ? link2[cur] : link1[cur];
                        prev = cur;
                        cur = nxt;
                    }
                }

                while (static_cast<int>(dpow.size()) <= loops)
                    dpow.push_back(dpow.back() * dpow[1]);
                QuarterLaurent w = weight.scaled(1, quarter_of_int(smoothing == 0 ? 1 : -1));
                if (loops)
                    w *= dpow[loops];
                auto it = out.find(next);
                if (it == out.end())
                    out.emplace(std::move(next), std::move(w));
                else
                    it->second += w;
            }
        }
        states = std::move(out);
    }

    // All that remains is the strand carrying the two cut ends.
    QuarterLaurent acc(VarTag::A);
    for (const auto& [match, weight] : states)
        acc += weight;
    return acc;
}

QuarterLaurent bracket(const PlanarDiagram& d, Engine engine, const BracketOptions& opts) {
    switch (engine) {
        case Engine::naive: return bracket_naive(d, opts);
        case Engine::tl: return bracket_tl(d, opts);
        case Engine::automatic:
            return d.size() <= opts.naive_cap ? bracket_naive(d, opts) : bracket_tl(d, opts);
    }
    return QuarterLaurent::one(VarTag::A);
}

QuarterLaurent jones(const PlanarDiagram& d, Engine engine, const BracketOptions& opts) {
    QuarterLaurent j = substitute_A_to_t(bracket(d, engine, opts), writhe(d));
    for (const auto& [num, c] : j.terms())
        if (num % 4 != 0)
            fail(errc::non_integer_result,
                 "Jones polynomial of a knot landed off the integer grid: " + j.str());
    return j;
}

Quarter m_invariant(const PlanarDiagram& d, Engine engine, const BracketOptions& opts) {
    return jones(d, engine, opts).min_degree();
}

Quarter m_formula(const PlanarDiagram& d, const CheckerboardColoring& coloring) {
    detail::require_alternating_formulas(d);
    int n = d.size();
    return Quarter{3 * writhe(d) - n - 2 * coloring.X + 2};
}

DegreeReport degree_theorem_check(const PlanarDiagram& d, const CheckerboardColoring& coloring,
                                  Engine engine, const BracketOptions& opts) {
    detail::require_alternating_formulas(d);
    QuarterLaurent b = bracket(d, engine, opts);
    DegreeReport rep;
    rep.bracket_max = b.max_degree();
    rep.bracket_min = b.min_degree();
    rep.expected_max = d.size() + 2 * coloring.X - 2;
    rep.expected_min = -d.size() - 2 * coloring.Y + 2;
    return rep;
}

} // namespace knot
