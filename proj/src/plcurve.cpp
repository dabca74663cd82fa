#include "jones/plcurve.hpp"

#include "jones/errors.hpp"

namespace jones {

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw input_error("bad rational: " + s);
  r.canonicalize();
  return r;
}

Rat sq_dist_point_segment(const Pt& p, const Pt& a, const Pt& b) {
  Pt ab = b - a;
  Rat len2 = sq_norm(ab);
  if (len2 == 0) return sq_norm(p - a);
  Rat t = dot(p - a, ab) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return sq_norm(p - (a + t * ab));
}

Rat sq_dist_segments(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
  if (segment_intersection(a, b, c, d)) return Rat(0);
  Rat m = sq_dist_point_segment(a, c, d);
  Rat t = sq_dist_point_segment(b, c, d);
  if (t < m) m = t;
  t = sq_dist_point_segment(c, a, b);
  if (t < m) m = t;
  t = sq_dist_point_segment(d, a, b);
  if (t < m) m = t;
  return m;
}

void simplify_curve(PLCurve& c) {
  if (c.v.size() < 2) return;
  std::vector<Pt> out;
  out.reserve(c.v.size());
  for (const Pt& p : c.v) {
    if (!out.empty() && out.back() == p) continue;
    while (out.size() >= 2) {
      const Pt& q = out[out.size() - 1];
      const Pt& r = out[out.size() - 2];
      // drop q if r -> q -> p is collinear and monotone
      if (cross(q - r, p - q) == 0 && dot(q - r, p - q) >= 0)
        out.pop_back();
      else
        break;
    }
    out.push_back(p);
  }
  if (c.closed) {
    // wrap-around cleanup: first/last duplicates and collinearity at the seam
    while (out.size() >= 2 && out.front() == out.back()) out.pop_back();
    bool changed = true;
    while (changed && out.size() >= 3) {
      changed = false;
      const Pt& r = out[out.size() - 2];
      const Pt& q = out.back();
      const Pt& p = out.front();
      if (cross(q - r, p - q) == 0 && dot(q - r, p - q) >= 0) {
        out.pop_back();
        changed = true;
      }
      if (out.size() >= 3) {
        const Pt& r2 = out.back();
        const Pt& q2 = out.front();
        const Pt& p2 = out[1];
        if (cross(q2 - r2, p2 - q2) == 0 && dot(q2 - r2, p2 - q2) >= 0) {
          out.erase(out.begin());
          changed = true;
        }
      }
    }
  }
  c.v = std::move(out);
}

int winding_number(const PLCurve& loop, const Pt& p) {
  if (!loop.closed) throw geometry_error("winding_number needs a closed curve");
  int w = 0;
  int n = loop.segment_count();
  for (int i = 0; i < n; ++i) {
    const Pt& a = loop.seg_a(i);
    const Pt& b = loop.seg_b(i);
    // crossing of the downward ray x == p.x, y < p.y; half-open rule in x
    bool right = a.x < p.x && p.x <= b.x;
    bool left = b.x < p.x && p.x <= a.x;
    if (!right && !left) continue;
    // y at the crossing
    Rat t = (p.x - a.x) / (b.x - a.x);
    Rat y = a.y + t * (b.y - a.y);
    if (y == p.y) throw geometry_error("winding_number: point on curve");
    if (y < p.y) w += right ? 1 : -1;
  }
  return w;
}

std::optional<SegHit> segment_intersection(const Pt& a, const Pt& b, const Pt& c,
                                           const Pt& d, bool* overlap) {
  if (overlap) *overlap = false;
  Pt r = b - a, s = d - c;
  Rat denom = cross(r, s);
  Pt ca = c - a;
  if (denom == 0) {
    if (cross(ca, r) == 0 && sq_norm(r) > 0 && sq_norm(s) > 0) {
      // collinear: overlap iff the parameter intervals intersect
      Rat len2 = sq_norm(r);
      Rat t0 = dot(ca, r) / len2;
      Rat t1 = t0 + dot(s, r) / len2;
      if (t1 < t0) std::swap(t0, t1);
      if (t1 >= 0 && t0 <= 1 && overlap && t1 > 0 && t0 < 1) *overlap = true;
    }
    return std::nullopt;
  }
  Rat t = cross(ca, s) / denom;  // along [a,b]
  Rat u = cross(ca, r) / denom;  // along [c,d]
  if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
  return SegHit{t, u};
}

}  // namespace jones
