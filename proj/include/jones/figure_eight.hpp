#pragma once

#include <string>
#include <vector>

#include "jones/diagram.hpp"

namespace jones {

// One intersection point of a figure eight with an alpha curve. Non-puncture
// base points carry two of these (the e / e' pair); puncture base points one.
struct DoubledPoint {
  int id = 0;        // canonical index within the system
  int base_id = 0;   // underlying IntersectionPoint
  bool primed = false;
  int alpha_index = 0;
  int beta_index = 0;
  Pt position;       // on the axis, within epsilon of the base point
  Rat e_param;       // position along the figure eight
  std::string label; // paper-style label, e.g. "b2'"
};

// Immersed figure-eight loop around one beta curve: two offset rails joined
// by lobes around the endpoint punctures, with a single transverse
// self-crossing on the approach to the even puncture.
struct FigureEight {
  int beta_index = 0;
  PLCurve curve;            // closed
  Rat cross_param_1;        // the two passes through the self-crossing
  Rat cross_param_2;
  Pt start_puncture;        // the non-even endpoint of the beta
  Pt even_puncture;         // mu_{2j}
};

struct FigureEightSystem {
  int active = 0;                        // number of alpha/beta pairs in play
  std::vector<IntersectionPoint> base;   // intersections of the active curves
  std::vector<FigureEight> eights;       // indexed by beta (0-based)
  std::vector<DoubledPoint> points;      // sorted by (alpha, position)
  std::vector<int> nu;                   // per beta j: id of nu_j
};

// Build figure eights around the first `active` betas (all of them by
// default; the reduced variant passes m-1). Throws geometry_error if no
// push-off width separates the features.
FigureEightSystem build_figure_eights(const FlattenedDiagram& d, int active = -1);

// Points of Z as an id-indexed list; |Z| = 2|Zbar| - 2*active.
const DoubledPoint& point_for_base(const FigureEightSystem& sys, int base_id,
                                   bool primed);

// Polyline along the figure eight from param t0 to t1; `forward` walks in
// increasing param direction (mod the cycle).
std::vector<Pt> arc_between(const PLCurve& closed_curve, const Rat& t0,
                            const Rat& t1, bool forward);

}  // namespace jones
