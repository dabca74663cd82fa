#pragma once

#include <string>
#include <vector>

namespace jones {

struct BraidLetter {
  int index;  // 1 .. strands-1
  int sign;   // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

// A braid word. Letters read top to bottom: the first letter acts first.
struct BraidWord {
  int strands = 1;
  std::vector<BraidLetter> letters;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// Parse whitespace-separated signed integers ("1 -2 1"). Each letter's
// absolute value must lie in 1..strands-1.
BraidWord parse_braid(const std::string& text, int strands);

std::string serialize_braid(const BraidWord& b);

// Positive minus negative crossings.
int writhe(const BraidWord& b);

// The plat braid b x 1^m on 2m strands: same letters, acting on the first
// m strands.
BraidWord to_plat(const BraidWord& b);

}  // namespace jones
