#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace jones {

// All planar geometry runs on exact rationals; doubles appear only in the
// turning-angle lift and in rendering.
using Rat = mpq_class;

struct Pt {
  Rat x, y;

  Pt() : x(0), y(0) {}
  Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}
  Pt(long px, long py) : x(px), y(py) {}

  friend Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
  friend Pt operator*(const Rat& s, const Pt& p) { return {s * p.x, s * p.y}; }
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Pt& a, const Pt& b) { return a.x * b.x + a.y * b.y; }
inline Rat sq_norm(const Pt& a) { return a.x * a.x + a.y * a.y; }

inline double to_double(const Rat& r) { return r.get_d(); }

// Serialization used by the diagram text format: "p/q" (or "p" when q == 1).
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Exact squared distance from point to segment [a,b].
Rat sq_dist_point_segment(const Pt& p, const Pt& a, const Pt& b);

// Exact squared distance between two segments.
Rat sq_dist_segments(const Pt& a, const Pt& b, const Pt& c, const Pt& d);

}  // namespace jones
