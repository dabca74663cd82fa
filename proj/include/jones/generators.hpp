#pragma once

#include <string>
#include <vector>

#include "jones/figure_eight.hpp"

namespace jones {

// A Bigelow generator: one doubled point on each active alpha, with pairwise
// distinct beta indices.
struct Generator {
  std::vector<int> point_ids;  // slot i = point on alpha i+1
  std::vector<int> betas;      // slot i = its beta index
  std::string label;           // space-joined point labels

  int permutation_parity() const;  // +1 even, -1 odd
};

// Exhaustive enumeration in canonical order (per-alpha candidates ordered by
// beta index, branch, position).
std::vector<Generator> enumerate_generators(const FigureEightSystem& sys);

// nu = the preimages of the even punctures.
Generator distinguished_generator(const FigureEightSystem& sys);

// Base intersection ids, slot per alpha.
std::vector<int> project_to_base(const FigureEightSystem& sys, const Generator& g);

}  // namespace jones
