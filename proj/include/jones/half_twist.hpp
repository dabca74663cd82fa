#pragma once

#include <vector>

#include "jones/braid.hpp"
#include "jones/plcurve.hpp"

namespace jones {

// Elementary half-twist exchanging the adjacent punctures at x = k and
// x = k+1 (unit spacing, punctures on the real axis). Realized as a
// piecewise-linear square-annulus twist centered at (k + 1/2, 0): the inner
// square maps by 180-degree rotation, the outer square boundary is fixed,
// and the square annulus between them is sheared along its perimeter
// parameter. sign +1 shears counterclockwise.
struct ElementaryTwist {
  int k;
  int sign;
};

// How plat-braid letters are realized geometrically. A letter twists two
// punctures one slot apart (the braid strands interleave with the trivial
// strands), so it expands to an elementary twist conjugated by the twist of
// an adjacent pair. The constants below are pinned by the left-trefoil
// grading tables.
struct TwistConvention {
  int handedness = -1;   // geometric shear sign of a positive braid letter
  int conj_delta = 1;    // sign of the conjugating elementary twist
  bool conj_next = true; // conjugate by g_{a+1} (else by g_a)
};

// Expand a plat word on 2m strands into elementary twists, free-reducing
// adjacent inverse pairs. Plat strand j sits at puncture 2j-1 for j <= m and
// at puncture 2(j-m) for j > m.
std::vector<ElementaryTwist> expand_plat_word(const BraidWord& plat,
                                              const TwistConvention& conv = {});

// Exact image of a single point.
Pt twist_point(const Pt& p, const ElementaryTwist& t);

// Exact image of a curve: subdivides segments at all cell boundaries of the
// twist's piecewise-affine structure, then maps vertices.
PLCurve twist_curve(const PLCurve& c, const ElementaryTwist& t);

}  // namespace jones
