#pragma once

#include <array>
#include <vector>

#include "knotcalc/diagram.hpp"
#include "knotcalc/engine.hpp"
#include "knotcalc/laurent.hpp"

namespace knot {

/// Parameters of the k-twisted positive Whitehead double of a companion
/// diagram. The constructed diagram carries a -w+k full-twist correction so
/// the result depends only on the companion knot and k.
struct DoubleSpec {
    PlanarDiagram companion;
    int k = 0;
};

struct DoubleResult {
    PlanarDiagram diagram;
    /// Indices of the two clasp crossings in diagram.crossings.
    std::array<int, 2> clasp_crossings{};
    /// copy_arcs[arc-1] = arc labels of the left/right parallel copies of the
    /// companion arc; the spliced arc has no surviving copies ({0,0}).
    std::vector<std::array<int, 2>> copy_arcs;
    int splice_arc = 0;
};

/// Builds D_+(K,k): a blackboard-framed parallel copy of the companion (four
/// crossings per companion crossing), a positive clasp (two crossings) and
/// k - w(companion) signed full twists (two crossings each). splice_arc names
/// the companion arc at which the clasp-and-twist gadget interrupts the
/// parallel copy; any choice yields the same knot.
DoubleResult whitehead_double(const DoubleSpec& spec, int splice_arc = 1);

/// The (2n+1)-crossing alternating twist-knot diagram with all crossings
/// positive: a (2n-1)-crossing twist column closed by a two-crossing clasp.
/// Crossings 0..2n-2 are the twist column; 2n-1 and 2n are the clasp.
PlanarDiagram family_k2n1(int n);

struct CrossingSelector {
    int index = 0;
};

/// Flips the selected positive crossing; the writhe drops by exactly 2.
PlanarDiagram change_crossing(const PlanarDiagram& d, CrossingSelector sel);

/// One strand through a blow-up site: the arc it runs on and its direction
/// through the spanning disk (+1 or -1).
struct BlowupStrand {
    int arc = 0;
    int dir = +1;
};

/// Full-twist insertion site: the strands in the order the fiducial arc
/// crosses them, plus the handedness of the twist.
struct BlowupSite {
    std::vector<BlowupStrand> strands;
    int sign = +1;
};

/// Inserts a full twist of the given sign on the listed strands: a single
/// kink for one strand, the braid (s1 s2 ... s_{m-1})^m with m(m-1) equal-
/// handed crossings otherwise. Planarity is re-checked after insertion.
PlanarDiagram blowup(const PlanarDiagram& d, const BlowupSite& site);

/// Signed number of strand passages through the spanning disk of the site's
/// encircling unknot.
int linking_number(const PlanarDiagram& d, const BlowupSite& site);

struct Lemma31Report {
    int crossing = 0;
    int k = 0;
    int linking_plus = 0;  ///< linking number at the +1 blow-up site
    int linking_minus = 0; ///< linking number at the -1 blow-up site
    QuarterLaurent jones_blowup_plus{VarTag::t};
    QuarterLaurent jones_double_minus{VarTag::t};  ///< D_+(K_-, k)
    QuarterLaurent jones_blowup_minus{VarTag::t};
    QuarterLaurent jones_double_minus4{VarTag::t}; ///< D_+(K_-, k-4)
    bool plus_matches = false;
    bool minus_matches = false;
    bool passed() const {
        return plus_matches && minus_matches && linking_plus == 0 && linking_minus == 0;
    }
};

/// Checks, at the level of Jones polynomials, that blowing up +1 on the
/// zero-linked four-strand site at the doubled crossing converts D_+(K_+,k)
/// into D_+(K_-,k), and blowing up -1 on the companion site converts it into
/// D_+(K_-,k-4). Throws LemmaCheckFailed when an equality fails.
Lemma31Report verify_lemma31(const PlanarDiagram& companion_plus, CrossingSelector sel, int k,
                             Engine engine = Engine::tl, const BracketOptions& opts = {});

} // namespace knot
