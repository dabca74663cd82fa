#pragma once

#include <optional>
#include <vector>

#include "jones/rational.hpp"

namespace jones {

// Piecewise-linear curve. Open curves are vertex chains; closed curves wrap
// from the last vertex back to the first.
struct PLCurve {
  std::vector<Pt> v;
  bool closed = false;

  int segment_count() const {
    if (v.size() < 2) return 0;
    return closed ? static_cast<int>(v.size()) : static_cast<int>(v.size()) - 1;
  }
  // Endpoints of segment i (i in [0, segment_count)).
  const Pt& seg_a(int i) const { return v[i]; }
  const Pt& seg_b(int i) const { return v[(i + 1) % v.size()]; }
};

// Drop consecutive duplicate vertices and merge collinear triples.
void simplify_curve(PLCurve& c);

// Signed crossing count of the downward vertical ray from p, counterclockwise
// positive. p must not lie on the curve.
int winding_number(const PLCurve& loop, const Pt& p);

// Proper intersection of segments [a,b] and [c,d]: returns the parameters
// (s, t) in [0,1]x[0,1] when the segments meet in exactly one point, nullopt
// if disjoint. Collinear overlap reports failure via the flag.
struct SegHit {
  Rat s, t;  // point = a + s*(b-a) = c + t*(d-c)
};
std::optional<SegHit> segment_intersection(const Pt& a, const Pt& b, const Pt& c,
                                           const Pt& d, bool* overlap = nullptr);

inline Pt lerp(const Pt& a, const Pt& b, const Rat& t) { return a + t * (b - a); }

}  // namespace jones
