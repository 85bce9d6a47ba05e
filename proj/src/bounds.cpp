#include "knotcalc/bounds.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace knot {

namespace {

void check_nonempty(const TnuInterval& iv, const std::string& context) {
    if (iv.lower > iv.upper)
        fail(errc::empty_interval, context + " produced the empty interval [" +
                                       std::to_string(iv.lower) + "," +
                                       std::to_string(iv.upper) + "]");
}

} // namespace

TnuInterval ln_bounds(int tb_k, int tb_mirror) {
    TnuInterval iv;
    iv.lower = tb_k + 1;
    iv.upper = -tb_mirror;
    iv.sources = {{"lower", "TB(K)+1 = " + std::to_string(iv.lower) + " (Livingston-Naik)"},
                  {"upper", "-TB(-K) = " + std::to_string(iv.upper) + " (Livingston-Naik)"}};
    check_nonempty(iv, "Livingston-Naik bounds with TB(K)=" + std::to_string(tb_k) +
                           ", TB(-K)=" + std::to_string(tb_mirror));
    return iv;
}

TnuInterval slicing_bounds(const SlicingData& data) {
    if (data.pairs.empty())
        fail(errc::empty_data, "no slicing recipes given");
    TnuInterval iv;
    iv.lower = INT_MIN;
    iv.upper = INT_MAX;
    for (auto [p, n] : data.pairs) {
        if (p < 0 || n < 0)
            fail(errc::empty_data, "slicing recipe entries must be nonnegative");
        if (-4 * n > iv.lower) {
            iv.lower = -4 * n;
        }
        if (4 * p < iv.upper) {
            iv.upper = 4 * p;
        }
    }
    iv.sources = {{"lower", "-4n over slicing recipes = " + std::to_string(iv.lower)},
                  {"upper", "4p over slicing recipes = " + std::to_string(iv.upper)}};
    check_nonempty(iv, "slicing bounds");
    return iv;
}

TnuInterval crossing_change_propagate(const TnuInterval& interval_minus) {
    TnuInterval iv = interval_minus;
    iv.upper += 4;
    iv.sources.emplace_back("upper", "crossing change: t_nu(K+) <= t_nu(K-)+4");
    return iv;
}

TnuInterval crossing_change_reverse(const TnuInterval& interval_plus) {
    TnuInterval iv = interval_plus;
    iv.lower -= 4;
    iv.sources.emplace_back("lower", "crossing change: t_nu(K-) >= t_nu(K+)-4");
    return iv;
}

TnuInterval combine(const std::vector<TnuInterval>& intervals) {
    if (intervals.empty())
        fail(errc::empty_data, "no intervals to combine");
    TnuInterval out = intervals.front();
    for (size_t i = 1; i < intervals.size(); ++i) {
        const TnuInterval& iv = intervals[i];
        out.lower = std::max(out.lower, iv.lower);
        out.upper = std::min(out.upper, iv.upper);
        out.sources.insert(out.sources.end(), iv.sources.begin(), iv.sources.end());
        if (out.lower > out.upper) {
            std::string what = "incompatible bounds:";
            for (const auto& [end, src] : out.sources)
                what += " [" + end + "] " + src + ";";
            fail(errc::empty_interval, what);
        }
    }
    return out;
}

SlicingStats slicing_stats(const SlicingData& data) {
    if (data.pairs.empty())
        fail(errc::empty_data, "no slicing recipes given");
    SlicingStats st;
    st.us_plus = INT_MAX;
    st.us_minus = INT_MAX;
    st.Us = INT_MAX;
    for (auto [p, n] : data.pairs) {
        if (p < 0 || n < 0)
            fail(errc::empty_data, "slicing recipe entries must be nonnegative");
        st.us_plus = std::min(st.us_plus, p);
        st.us_minus = std::min(st.us_minus, n);
        st.Us = std::min(st.Us, std::max(p, n));
    }
    return st;
}

long long nu_torus(long long p, long long q) {
    if (p <= 0 || q <= 0)
        fail(errc::non_positive, "torus knot parameters must be positive");
    if (std::gcd(p, q) != 1)
        fail(errc::not_coprime, std::to_string(p) + " and " + std::to_string(q) +
                                    " share the factor " + std::to_string(std::gcd(p, q)));
    return (p - 1) * (q - 1) / 2;
}

} // namespace knot
