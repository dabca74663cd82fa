#pragma once

#include <vector>

#include "jones/diagram.hpp"
#include "jones/figure_eight.hpp"
#include "jones/generators.hpp"

namespace jones {

// All gradings of one generator. Invariants (asserted by grade_all):
//   j = 2(t - q) + shift,  p = p_tilde - shift,  two_r = 2p + j,
//   two_r = 2(p_tilde + t - q) - shift,  sign = (-1)^p_tilde.
// For a full diagram shift = m + w; the reduced variant passes (m-1) + w.
struct GradingRecord {
  int q = 0;
  int t = 0;
  int j = 0;
  int p_tilde = 0;
  int p = 0;
  int two_r = 0;
  int sign = 1;
};

// Winding grading of a single doubled point: total winding number around all
// 2m punctures of the basepoint loop through the handles. Zero on every nu.
int q_star(const FlattenedDiagram& d, const FigureEightSystem& sys, int point_id);

// Phase grading of a single doubled point: lift of the squared tangent
// direction along the figure eight from nu, in half turns. Zero on every nu.
int p_star(const FigureEightSystem& sys, int point_id);

// Diagonal-linking grading of a base tuple (one intersection id per alpha)
// relative to the distinguished tuple of even punctures.
int t_bar(const FlattenedDiagram& d, const FigureEightSystem& sys,
          const std::vector<int>& base_ids);

// Gradings for every generator. shift = (#active pairs) + writhe.
// Serial reference implementation.
std::vector<GradingRecord> grade_all_serial(const FlattenedDiagram& d,
                                            const FigureEightSystem& sys,
                                            const std::vector<Generator>& gens,
                                            int shift);

// OpenMP kernel; identical results to grade_all_serial.
std::vector<GradingRecord> grade_all(const FlattenedDiagram& d,
                                     const FigureEightSystem& sys,
                                     const std::vector<Generator>& gens, int shift);

// Local crossing-orientation sign: (-1)^active times the product of the
// vertical crossing directions of the generator's points. Equals
// (-1)^p_tilde; checked by the invariant tests.
int orientation_sign(const FigureEightSystem& sys, const Generator& g);

}  // namespace jones
