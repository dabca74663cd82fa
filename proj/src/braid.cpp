#include "jones/braid.hpp"

#include <sstream>

#include "jones/errors.hpp"

namespace jones {

BraidWord parse_braid(const std::string& text, int strands) {
  if (strands < 1) throw input_error("strand count must be positive");
  BraidWord b;
  b.strands = strands;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int val = 0;
    try {
      size_t pos = 0;
      val = std::stoi(tok, &pos);
      if (pos != tok.size()) throw input_error("malformed braid letter: " + tok);
    } catch (const std::exception&) {
      throw input_error("malformed braid letter: " + tok);
    }
    if (val == 0) throw input_error("braid letter may not be 0");
    int idx = val > 0 ? val : -val;
    if (idx >= strands)
      throw input_error("letter " + tok + " out of range for " +
                        std::to_string(strands) + " strands");
    b.letters.push_back({idx, val > 0 ? 1 : -1});
  }
  return b;
}

std::string serialize_braid(const BraidWord& b) {
  std::string out;
  for (size_t i = 0; i < b.letters.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(b.letters[i].sign * b.letters[i].index);
  }
  return out;
}

int writhe(const BraidWord& b) {
  int w = 0;
  for (const auto& l : b.letters) w += l.sign;
  return w;
}

BraidWord to_plat(const BraidWord& b) {
  BraidWord p = b;
  p.strands = 2 * b.strands;
  return p;
}

}  // namespace jones
