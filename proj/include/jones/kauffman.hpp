#pragma once

#include "jones/braid.hpp"
#include "jones/laurent.hpp"

namespace jones {

// Jones polynomial of the braid closure via the Kauffman bracket state sum:
// 2^c resolutions, loop counting by union-find, writhe correction, and the
// substitution A = t^{-1/4}. Output exponents are in t^{1/2} units.
// Completely independent of the flattened-diagram pipeline; used as the
// brute-force oracle. Words are capped at 24 letters.
Laurent kauffman_jones_serial(const BraidWord& b);

// OpenMP kernel over resolution-bitmask ranges; identical output.
Laurent kauffman_jones(const BraidWord& b);

}  // namespace jones
