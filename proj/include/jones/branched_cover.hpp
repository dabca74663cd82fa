#pragma once

#include <map>
#include <vector>

#include "jones/gradings.hpp"

namespace jones {

// Lift of an intersection point to the double branched cover: punctures have
// a single lift (sheet 0), interior points two (sheets +1/-1).
struct HatPoint {
  int base_id = 0;
  int sheet = 0;
};

struct BranchedCoverData {
  std::vector<HatPoint> points;
  // The chosen identification {e,e'} <-> {+,-}: sheet assigned to the
  // unprimed branch of each interior base point. The identification is not
  // canonical; this records the choice (sheet at first passage, walking each
  // beta from its even endpoint with the alphas as branch cuts).
  std::map<int, int> e_sheet;
};

BranchedCoverData lift_points(const FlattenedDiagram& d, const FigureEightSystem& sys);

// m-tuples of lifts with pairwise distinct alpha and beta indices, together
// with the induced bijection from the Bigelow generators (as indices into
// `gens`). |hat generators| always equals |gens|.
struct HatGenerators {
  std::vector<std::vector<HatPoint>> tuples;
  std::vector<int> from_bigelow;  // gens index -> tuples index
};
HatGenerators hat_generators(const FigureEightSystem& sys,
                             const BranchedCoverData& cover,
                             const std::vector<Generator>& gens);

// Maslov grading of the fixed-point chart: p_tilde + t - q.
inline int r_tilde(const GradingRecord& r) { return r.p_tilde + r.t - r.q; }

}  // namespace jones
