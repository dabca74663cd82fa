#pragma once

#include <vector>

#include "jones/gradings.hpp"
#include "jones/laurent.hpp"

namespace jones {

// Unnormalized Jones polynomial in q: sum of sign * q^J over the generators.
Laurent bigelow_polynomial(const std::vector<GradingRecord>& records);

// Divide by q + q^{-1} and substitute q = -t^{1/2}. Exponents come out in
// half-integer t units.
Laurent normalize_jones(const Laurent& j_q);

// V_L(t) from the P and R gradings alone:
//   V_L = -(t^{1/2} + t^{-1/2})^{-1} * sum (-1)^P t^{R-P}.
// Computed independently of the Q/T route.
Laurent corollary_polynomial(const std::vector<GradingRecord>& records);

struct ReducedResult {
  bool condition_holds = false;  // path from mu_2m to infinity is clear
  Laurent v_t;                   // V_L in t^{1/2} units when it holds
};

// Reduced variant: drop the last alpha/beta pair, grade the reduced
// generators (windings still around all 2m punctures), and read V_L off
// directly. Requires the clear-path condition, checked geometrically.
ReducedResult reduced_polynomial(const FlattenedDiagram& d, int writhe_of_braid);

}  // namespace jones
