#include "knotcalc/builtins.hpp"

#include <cctype>

#include "knotcalc/doubles.hpp"

namespace knot {

PlanarDiagram builtin(const std::string& name) {
    auto named = [&](const char* pd) {
        PlanarDiagram d = parse_pd(pd);
        d.name = name;
        return d;
    };
    if (name == "unknot")
        return named("");
    if (name == "trefoil")
        return named("X(4,2,5,1) X(6,4,1,3) X(2,6,3,5)");
    if (name == "trefoil-lh")
        return named("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    if (name == "figure8")
        return named("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)");
    if (name.size() > 1 && name[0] == 'k') {
        bool digits = true;
        for (size_t i = 1; i < name.size(); ++i)
            digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
        if (digits) {
            long v = 0;
            try {
                v = std::stol(name.substr(1));
            } catch (const std::out_of_range&) {
                fail(errc::malformed_code, "family index out of range in '" + name + "'");
            }
            if (v < 3 || v % 2 == 0)
                fail(errc::malformed_code,
                     "family knots are k3, k5, k7, ... (odd crossing number >= 3)");
            return family_k2n1(static_cast<int>((v - 1) / 2));
        }
    }
    fail(errc::malformed_code, "unknown built-in diagram '" + name + "'");
}

} // namespace knot
