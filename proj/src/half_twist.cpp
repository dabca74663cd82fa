#include "jones/half_twist.hpp"

#include <algorithm>
#include <array>

#include "jones/errors.hpp"

namespace jones {

namespace {

constexpr int kRings = 4;

// Corners of the unit square in perimeter order, counterclockwise from (1,0).
const std::array<Pt, 8>& corners() {
  static const std::array<Pt, 8> u = {Pt(1, 0),  Pt(1, 1),   Pt(0, 1),  Pt(-1, 1),
                                      Pt(-1, 0), Pt(-1, -1), Pt(0, -1), Pt(1, -1)};
  return u;
}

Rat ring_radius(int i) {
  // r1 = 3/4, r2 = 1, four equal rings
  return Rat(3, 4) + Rat(i, 4 * kRings);
}

// Perimeter parameter of v with L-inf norm rho: returns (octant j, fraction f).
std::pair<int, Rat> locate_octant(const Pt& v, const Rat& rho) {
  if (v.x == rho) {
    if (v.y >= 0) return {0, v.y / rho};
    return {7, 1 + v.y / rho};
  }
  if (v.y == rho) {
    Rat t = 2 - v.x / rho;  // in [1,3]
    int j = t < 2 ? 1 : 2;
    return {j, t - j};
  }
  if (v.x == -rho) {
    Rat t = 4 - v.y / rho;  // in [3,5]
    int j = t < 4 ? 3 : 4;
    return {j, t - j};
  }
  Rat t = 6 + v.x / rho;  // in [5,7]
  int j = t < 6 ? 5 : 6;
  return {j, t - j};
}

// Affine image of p under the map sending triangle (p1,p2,p3) to (q1,q2,q3).
Pt map_triangle(const Pt& p, const Pt& p1, const Pt& p2, const Pt& p3, const Pt& q1,
                const Pt& q2, const Pt& q3) {
  Pt e1 = p2 - p1, e2 = p3 - p1;
  Rat det = cross(e1, e2);
  Pt d = p - p1;
  Rat l1 = cross(d, e2) / det;
  Rat l2 = cross(e1, d) / det;
  return q1 + l1 * (q2 - q1) + l2 * (q3 - q1);
}

struct TwistGeometry {
  Pt c;
  int sign;

  explicit TwistGeometry(const ElementaryTwist& t)
      : c(Rat(2 * t.k + 1, 2), Rat(0)), sign(t.sign) {}

  // Perimeter shift in octant units at ring boundary i: a half turn (4
  // octants) at the inner square, tapering by one octant per ring to zero.
  int shift(int i) const { return sign * (kRings - i); }

  Pt map(const Pt& p) const {
    Pt v = p - c;
    Rat ax = abs(v.x), ay = abs(v.y);
    Rat rho = ax > ay ? ax : ay;
    if (rho >= ring_radius(kRings)) return p;
    if (rho <= ring_radius(0)) return c - v;
    int ring = 0;
    while (rho > ring_radius(ring + 1)) ++ring;
    auto [oct, f] = locate_octant(v, rho);
    (void)f;
    const auto& u = corners();
    Rat ri = ring_radius(ring), ro = ring_radius(ring + 1);
    Pt A = ri * u[oct], B = ro * u[oct], C = ro * u[(oct + 1) % 8],
       D = ri * u[(oct + 1) % 8];
    int si = shift(ring), so = shift(ring + 1);
    Pt A2 = ri * u[((oct + si) % 8 + 8) % 8];
    Pt B2 = ro * u[((oct + so) % 8 + 8) % 8];
    Pt C2 = ro * u[((oct + 1 + so) % 8 + 8) % 8];
    Pt D2 = ri * u[((oct + 1 + si) % 8 + 8) % 8];
    // split along diagonal A-C
    Rat side_p = cross(C - A, v - A);
    Rat side_b = cross(C - A, B - A);
    Pt img;
    if (side_p == 0 || (side_p > 0) == (side_b > 0))
      img = map_triangle(v, A, B, C, A2, B2, C2);
    else
      img = map_triangle(v, A, C, D, A2, C2, D2);
    return c + img;
  }

  // All cut segments bounding cells of the piecewise-affine structure,
  // in coordinates relative to c.
  std::vector<std::pair<Pt, Pt>> cuts() const {
    std::vector<std::pair<Pt, Pt>> out;
    const auto& u = corners();
    for (int i = 0; i <= kRings; ++i) {
      Rat r = ring_radius(i);
      for (int j = 1; j < 8; j += 2)  // square sides run between odd corners
        out.emplace_back(r * u[j], r * u[(j + 2) % 8]);
    }
    for (int j = 0; j < 8; ++j)  // radial octant boundaries
      out.emplace_back(ring_radius(0) * u[j], ring_radius(kRings) * u[j]);
    for (int i = 0; i < kRings; ++i)  // triangle diagonals
      for (int j = 0; j < 8; ++j)
        out.emplace_back(ring_radius(i) * u[j], ring_radius(i + 1) * u[(j + 1) % 8]);
    return out;
  }
};

}  // namespace

Pt twist_point(const Pt& p, const ElementaryTwist& t) {
  return TwistGeometry(t).map(p);
}

PLCurve twist_curve(const PLCurve& c, const ElementaryTwist& t) {
  TwistGeometry g(t);
  auto cuts = g.cuts();
  Rat r2 = ring_radius(kRings);

  PLCurve out;
  out.closed = c.closed;
  int n = c.segment_count();
  for (int i = 0; i < n; ++i) {
    Pt a = c.seg_a(i), b = c.seg_b(i);
    out.v.push_back(g.map(a));
    // quick reject: segment bounding box vs twist support
    Rat lox = std::min(a.x, b.x) - g.c.x, hix = std::max(a.x, b.x) - g.c.x;
    Rat loy = std::min(a.y, b.y) - g.c.y, hiy = std::max(a.y, b.y) - g.c.y;
    if (hix < -r2 || lox > r2 || hiy < -r2 || loy > r2) continue;
    std::vector<Rat> params;
    for (const auto& [u0, u1] : cuts) {
      auto hit = segment_intersection(a, b, g.c + u0, g.c + u1);
      if (hit && hit->s > 0 && hit->s < 1) params.push_back(hit->s);
    }
    std::sort(params.begin(), params.end());
    params.erase(std::unique(params.begin(), params.end()), params.end());
    for (const Rat& s : params) out.v.push_back(g.map(lerp(a, b, s)));
  }
  if (!c.closed) out.v.push_back(g.map(c.v.back()));
  simplify_curve(out);
  return out;
}

std::vector<ElementaryTwist> expand_plat_word(const BraidWord& plat,
                                              const TwistConvention& conv) {
  if (plat.strands % 2 != 0)
    throw input_error("plat word must have an even strand count");
  int m = plat.strands / 2;
  std::vector<ElementaryTwist> word;
  auto push = [&word](int k, int sign) {
    if (!word.empty() && word.back().k == k && word.back().sign == -sign)
      word.pop_back();
    else
      word.push_back({k, sign});
  };
  for (const auto& l : plat.letters) {
    int geo = conv.handedness * l.sign;
    if (m == 1) {
      // two punctures only; letter 1 is the straight adjacent twist
      push(1, geo);
      continue;
    }
    int a;  // twisted punctures are a and a+2, dodging a+1
    if (l.index < m)
      a = 2 * l.index - 1;
    else if (l.index > m)
      a = 2 * (l.index - m);
    else
      throw input_error("plat letter " + std::to_string(l.index) +
                        " twists non-adjacent punctures; not representable");
    int cj = conv.conj_next ? a + 1 : a;
    int tw = conv.conj_next ? a : a + 1;
    push(cj, -conv.conj_delta);
    push(tw, geo);
    push(cj, conv.conj_delta);
  }
  return word;
}

}  // namespace jones
