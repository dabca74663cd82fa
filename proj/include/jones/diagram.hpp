#pragma once

#include <string>
#include <vector>

#include "jones/braid.hpp"
#include "jones/half_twist.hpp"
#include "jones/plcurve.hpp"

namespace jones {

// Exact-rational planar model of the 2m-punctured disk: the standard
// crossingless matching (alpha arcs on the real axis), its image under the
// plat braid (beta arcs), and the basepoint handles.
struct FlattenedDiagram {
  int m = 0;
  std::vector<Rat> punctures;    // x-positions 1..2m, all on the real axis
  std::vector<PLCurve> alphas;   // alpha_k = [2k-1, 2k], open, left to right
  std::vector<PLCurve> betas;    // beta_k = braid image of alpha_k, ends at 2k
  std::vector<PLCurve> handles;  // vertical segments, alpha midpoint down to eta_k
  Rat boundary_radius;           // 2m + 2

  Pt puncture_point(int k) const { return Pt(punctures[k - 1], Rat(0)); }  // k in 1..2m
  Pt alpha_midpoint(int i) const { return Pt(Rat(4 * i - 1, 2), Rat(0)); } // i in 1..m
  Pt handle_foot(int i) const { return Pt(Rat(4 * i - 1, 2), -boundary_radius); }
};

struct IntersectionPoint {
  int id = 0;           // index into the diagram's intersection list
  Pt position;
  int alpha_index = 0;  // 1..m
  int beta_index = 0;   // 1..m
  bool is_puncture = false;
  int alpha_order = 0;  // rank along the alpha arc, left to right
  int beta_order = 0;   // rank along the beta arc, start to end
  Rat beta_param;       // position along the beta (segment index + fraction)
};

FlattenedDiagram standard_matching(int m);

// Replace the betas by the images of the alphas under the plat braid, then
// normalize so every beta is transverse to the axis: on-axis runs are pushed
// off, crossings and endpoint approaches are made vertical.
FlattenedDiagram apply_braid(const FlattenedDiagram& d, const BraidWord& plat,
                             const TwistConvention& conv = {});

// Exact intersection points of alphas and betas, ordered by (alpha, position).
std::vector<IntersectionPoint> enumerate_intersections(const FlattenedDiagram& d);

// Optional simplification: repeatedly remove empty bigons between a beta and
// an alpha. Output polynomials are isotopy invariants, so this only shrinks
// the generator count.
void reduce_bigons(FlattenedDiagram& d);

// Test utility for the isotopy-invariance checks: inserts a pair of extra
// intersections by zigzagging a beta across its alpha near an endpoint.
void insert_artificial_bigon(FlattenedDiagram& d, int beta_index);

// Structured-text round trip (punctures and curve vertex lists, exact "p/q").
std::string serialize_diagram(const FlattenedDiagram& d);
FlattenedDiagram deserialize_diagram(const std::string& text);

// Throws geometry_error unless the betas are simple, pairwise disjoint arcs
// whose endpoint set is exactly the puncture set.
void validate_diagram(const FlattenedDiagram& d);

}  // namespace jones
