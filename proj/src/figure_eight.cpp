#include "jones/figure_eight.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "jones/errors.hpp"

namespace jones {

namespace {

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// Rational of bounded size close to x (within 2^-20 relative).
Rat quantize(double x) {
  Rat r(std::lround(x * 1048576.0), 1048576L);
  r.canonicalize();
  return r;
}

// Offset rail of an open polyline at distance ~eps on one side.
// side = +1 offsets to the left of travel.
std::vector<Pt> build_rail(const PLCurve& beta, const Rat& eps, int side) {
  int n = beta.segment_count();
  std::vector<Pt> normals(n + 1 > 0 ? n : 0);
  std::vector<Pt> rail;
  std::vector<Pt> offs_a(n), offs_b(n);
  for (int i = 0; i < n; ++i) {
    Pt d = beta.seg_b(i) - beta.seg_a(i);
    double len = std::sqrt(to_double(sq_norm(d)));
    Rat scale = quantize(to_double(eps) / len) * side;
    Pt nrm(-d.y * scale, d.x * scale);
    offs_a[i] = beta.seg_a(i) + nrm;
    offs_b[i] = beta.seg_b(i) + nrm;
    normals[i] = nrm;
  }
  rail.push_back(offs_a[0]);
  for (int i = 0; i + 1 < n; ++i) {
    Pt d1 = beta.seg_b(i) - beta.seg_a(i);
    Pt d2 = beta.seg_b(i + 1) - beta.seg_a(i + 1);
    Rat turn = cross(d1, d2);
    bool concave = side == 1 ? turn > 0 : turn < 0;
    if (turn != 0 && concave) {
      // miter: intersect the two offset lines
      Rat denom = cross(d1, d2);
      Pt diff = offs_a[i + 1] - offs_a[i];
      Rat t = cross(diff, d2) / denom;
      rail.push_back(offs_a[i] + t * d1);
    } else {
      rail.push_back(offs_b[i]);
      rail.push_back(offs_a[i + 1]);
    }
  }
  rail.push_back(offs_b[n - 1]);
  PLCurve tmp;
  tmp.v = rail;
  simplify_curve(tmp);
  return tmp.v;
}

// Trim a rail at the boundary of the square |x-cx| <= r, |y| <= r around the
// puncture at (cx, 0). from_end: trim the tail; else trim the head.
void trim_at_square(std::vector<Pt>& rail, const Rat& cx, const Rat& r, bool from_end) {
  auto inside = [&](const Pt& p) {
    return abs(p.x - cx) < r && abs(p.y) < r;
  };
  if (!from_end) std::reverse(rail.begin(), rail.end());
  // walk back from the end until we exit the square
  int i = static_cast<int>(rail.size()) - 1;
  while (i >= 0 && inside(rail[i])) --i;
  if (i < 0 || i == static_cast<int>(rail.size()) - 1)
    throw geometry_error("rail does not end inside the endpoint square");
  // crossing point on segment rail[i] -> rail[i+1]
  Pt a = rail[i], b = rail[i + 1];
  Pt dir = b - a;
  Rat best(2);
  for (int s = -1; s <= 1; s += 2) {
    if (dir.x != 0) {
      Rat t = (cx + Rat(s) * r - a.x) / dir.x;
      if (t > 0 && t <= 1 && t < best) {
        Pt p = a + t * dir;
        if (abs(p.y) <= r) best = t;
      }
    }
    if (dir.y != 0) {
      Rat t = (Rat(s) * r - a.y) / dir.y;
      if (t > 0 && t <= 1 && t < best) {
        Pt p = a + t * dir;
        if (abs(p.x - cx) <= r) best = t;
      }
    }
  }
  if (best > 1) throw geometry_error("rail trim: no square boundary crossing");
  rail.resize(i + 1);
  rail.push_back(a + best * dir);
  if (!from_end) std::reverse(rail.begin(), rail.end());
}

// Far-side lobe around the puncture at (cx,0): from F to T, both at height
// s*2eps on the approach side s, walking around the opposite side.
std::vector<Pt> make_lobe(const Rat& cx, const Rat& r, int s, const Pt& F, const Pt& T) {
  if (sign_of(F.x - cx) == sign_of(T.x - cx))
    throw geometry_error("lobe endpoints on the same side");
  int e = sign_of(F.x - cx);  // start on this horizontal side
  Rat R = r;
  std::vector<Pt> out;
  out.push_back(Pt(cx + Rat(e) * R, Rat(s) * R));
  out.push_back(Pt(cx + Rat(e) * R, Rat(-s) * R));
  out.push_back(Pt(cx - Rat(e) * R, Rat(-s) * R));
  out.push_back(Pt(cx - Rat(e) * R, Rat(s) * R));
  (void)F;
  (void)T;
  return out;
}

struct AxisHit {
  Rat x;
  Rat param;
};

std::vector<AxisHit> closed_axis_hits(const PLCurve& c) {
  std::vector<AxisHit> out;
  int n = c.segment_count();
  for (int s = 0; s < n; ++s) {
    const Pt& a = c.seg_a(s);
    const Pt& b = c.seg_b(s);
    if (a.y == 0 || b.y == 0)
      throw geometry_error("figure eight has a vertex on the axis");
    if ((a.y > 0) == (b.y > 0)) continue;
    Rat t = a.y / (a.y - b.y);
    out.push_back({a.x + t * (b.x - a.x), Rat(s) + t});
  }
  return out;
}

int alpha_of_x(const Rat& x, int active_alphas, int two_m) {
  if (x < 1 || x > two_m) return 0;
  mpz_class fl = x.get_num() / x.get_den();
  long f = fl.get_si();
  if (Rat(f) == x) return 0;  // exactly at a puncture: not an interior point
  if (f % 2 == 0) return 0;   // gap
  int a = static_cast<int>((f + 1) / 2);
  return a <= active_alphas ? a : 0;
}

// Self-intersection count with a double prefilter; returns the crossing
// params if there is exactly one crossing.
int count_self_crossings(const PLCurve& c, Rat* t1, Rat* t2) {
  int n = c.segment_count();
  std::vector<double> lox(n), hix(n), loy(n), hiy(n);
  for (int i = 0; i < n; ++i) {
    double ax = to_double(c.seg_a(i).x), bx = to_double(c.seg_b(i).x);
    double ay = to_double(c.seg_a(i).y), by = to_double(c.seg_b(i).y);
    lox[i] = std::min(ax, bx) - 1e-12;
    hix[i] = std::max(ax, bx) + 1e-12;
    loy[i] = std::min(ay, by) - 1e-12;
    hiy[i] = std::max(ay, by) + 1e-12;
  }
  int count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the cycle
      if (lox[i] > hix[j] || lox[j] > hix[i] || loy[i] > hiy[j] || loy[j] > hiy[i])
        continue;
      bool overlap = false;
      auto hit = segment_intersection(c.seg_a(i), c.seg_b(i), c.seg_a(j), c.seg_b(j),
                                      &overlap);
      if (overlap) return -1;
      if (hit) {
        ++count;
        if (count == 1 && t1 && t2) {
          *t1 = Rat(i) + hit->s;
          *t2 = Rat(j) + hit->t;
        }
      }
    }
  return count;
}

FigureEight build_one_eight(const FlattenedDiagram& d, int bi, const Rat& eps) {
  const PLCurve& beta = d.betas[bi];
  Pt even = beta.v.back();
  Pt start = beta.v.front();

  std::vector<Pt> railL = build_rail(beta, eps, +1);
  std::vector<Pt> railR = build_rail(beta, eps, -1);
  Rat lobe_r = 2 * eps;
  for (auto* rail : {&railL, &railR}) {
    trim_at_square(*rail, even.x, lobe_r, true);
    trim_at_square(*rail, start.x, lobe_r, false);
  }

  // crossover heights on the vertical approach to the even puncture
  int s_even = sign_of(beta.v[beta.v.size() - 2].y);
  Rat h_hi = Rat(s_even) * 6 * eps;
  Rat h_lo = Rat(s_even) * 4 * eps;
  auto insert_heights = [&](std::vector<Pt>& rail) {
    // final segment must be vertical and span past both heights
    Pt a = rail[rail.size() - 2], b = rail.back();
    if (a.x != b.x) throw geometry_error("even-end rail approach not vertical");
    if (abs(a.y) <= abs(h_hi)) throw geometry_error("rail too short for crossover");
    rail.insert(rail.end() - 1, {Pt(a.x, h_hi), Pt(a.x, h_lo)});
  };
  insert_heights(railL);
  insert_heights(railR);

  int s_start = sign_of(beta.v[1].y);

  // assemble the cycle
  FigureEight fe;
  fe.beta_index = bi + 1;
  fe.start_puncture = start;
  fe.even_puncture = even;
  PLCurve& E = fe.curve;
  E.closed = true;
  // railL up to its h_hi vertex
  E.v.assign(railL.begin(), railL.end() - 2);  // ... includes h_hi point
  // connector to railR h_lo, then railR tail (trim point)
  E.v.push_back(railR[railR.size() - 2]);  // h_lo on railR
  E.v.push_back(railR.back());             // railR trim at the lobe square
  // lobe at the even end, from railR side to railL side
  for (const Pt& p : make_lobe(even.x, lobe_r, s_even, railR.back(), railL.back()))
    E.v.push_back(p);
  E.v.push_back(railL.back());                 // railL trim
  E.v.push_back(railL[railL.size() - 2]);      // railL h_lo
  E.v.push_back(railR[railR.size() - 3]);      // railR h_hi (connector 2)
  // railR reversed from h_hi back to its start trim
  for (int i = static_cast<int>(railR.size()) - 4; i >= 0; --i) E.v.push_back(railR[i]);
  // lobe at the start end, from railR start to railL start
  for (const Pt& p : make_lobe(start.x, lobe_r, s_start, railR.front(), railL.front()))
    E.v.push_back(p);
  simplify_curve(E);

  Rat t1, t2;
  int crossings = count_self_crossings(E, &t1, &t2);
  if (crossings != 1)
    throw geometry_error("figure eight has " + std::to_string(crossings) +
                         " self-crossings (want 1)");
  fe.cross_param_1 = t1 < t2 ? t1 : t2;
  fe.cross_param_2 = t1 < t2 ? t2 : t1;
  return fe;
}

}  // namespace

namespace {

long rat_floor(const Rat& t) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  return q.get_si();
}

}  // namespace

std::vector<Pt> arc_between(const PLCurve& c, const Rat& t0, const Rat& t1,
                            bool forward) {
  int n = c.segment_count();
  auto point_at = [&](Rat t) {
    while (t < 0) t += n;
    while (t >= n) t -= n;
    long s = rat_floor(t);
    Rat f = t - Rat(s);
    return lerp(c.v[s], c.v[(s + 1) % n], f);
  };
  std::vector<Pt> out;
  out.push_back(point_at(t0));
  if (t0 == t1) return out;
  Rat dist = forward ? t1 - t0 : t0 - t1;
  while (dist <= 0) dist += n;
  // interior vertices at integer params along the walk
  Rat off = forward ? Rat(rat_floor(t0) + 1) - t0 : t0 - Rat(rat_floor(t0));
  if (off == 0) off = 1;
  for (; off < dist; off += 1)
    out.push_back(point_at(forward ? t0 + off : t0 - off));
  out.push_back(point_at(forward ? t0 + dist : t0 - dist));
  return out;
}

FigureEightSystem build_figure_eights(const FlattenedDiagram& d, int active) {
  if (active < 0) active = d.m;
  FigureEightSystem sys;
  sys.active = active;

  // intersections restricted to the active curves
  FlattenedDiagram sub = d;
  sub.m = active;
  sub.alphas.resize(active);
  sub.betas.resize(active);
  sub.handles.resize(active);
  // keep all punctures for later winding computations; enumerate only needs betas
  sys.base = enumerate_intersections(sub);

  // epsilon: a quarter of the smallest feature separation
  Rat eps(1, 8);
  {
    // axis features: punctures and all crossings
    std::vector<Rat> xs = d.punctures;
    for (const auto& p : sys.base)
      if (!p.is_puncture) xs.push_back(p.position.x);
    std::sort(xs.begin(), xs.end());
    for (size_t i = 0; i + 1 < xs.size(); ++i) {
      Rat g = xs[i + 1] - xs[i];
      if (g > 0) eps = rat_min(eps, g / 4);
    }
    for (int bi = 0; bi < active; ++bi) {
      const PLCurve& c = d.betas[bi];
      int n = c.segment_count();
      // shortest vertical run at the endpoints bounds the lobe/crossover space
      eps = rat_min(eps, abs(c.v[1].y) / 16);
      eps = rat_min(eps, abs(c.v[c.v.size() - 2].y) / 16);
      // self-clearance between non-adjacent segments
      std::vector<double> lox(n), hix(n), loy(n), hiy(n);
      for (int i = 0; i < n; ++i) {
        lox[i] = std::min(to_double(c.seg_a(i).x), to_double(c.seg_b(i).x));
        hix[i] = std::max(to_double(c.seg_a(i).x), to_double(c.seg_b(i).x));
        loy[i] = std::min(to_double(c.seg_a(i).y), to_double(c.seg_b(i).y));
        hiy[i] = std::max(to_double(c.seg_a(i).y), to_double(c.seg_b(i).y));
      }
      double cap = to_double(eps) * 4;
      for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
          double gx = std::max({lox[j] - hix[i], lox[i] - hix[j], 0.0});
          double gy = std::max({loy[j] - hiy[i], loy[i] - hiy[j], 0.0});
          if (gx > cap || gy > cap || gx * gx + gy * gy > cap * cap) continue;
          Rat d2 = sq_dist_segments(c.seg_a(i), c.seg_b(i), c.seg_a(j), c.seg_b(j));
          if (d2 == 0) throw geometry_error("beta self-intersection");
          // lower bound on the distance
          double lb = std::sqrt(to_double(d2)) * 0.9;
          Rat r = quantize(lb);
          if (r > 0) eps = rat_min(eps, r / 4);
        }
    }
  }

  for (int attempt = 0; attempt < 40; ++attempt) {
    try {
      sys.eights.clear();
      sys.points.clear();
      sys.nu.assign(active, -1);
      for (int bi = 0; bi < active; ++bi)
        sys.eights.push_back(build_one_eight(d, bi, eps));

      // enumerate figure-eight / alpha intersections and match to base points
      for (int bi = 0; bi < active; ++bi) {
        const FigureEight& fe = sys.eights[bi];
        std::vector<int> seen(sys.base.size(), 0);
        for (const AxisHit& hit : closed_axis_hits(fe.curve)) {
          int a = alpha_of_x(hit.x, active, 2 * d.m);
          if (a == 0) continue;
          // nearest base point of this beta on that alpha
          int best = -1;
          Rat bestd;
          for (const auto& p : sys.base) {
            if (p.beta_index != bi + 1 || p.alpha_index != a) continue;
            Rat dist = abs(p.position.x - hit.x);
            if (best < 0 || dist < bestd) {
              best = p.id;
              bestd = dist;
            }
          }
          if (best < 0 || bestd > 3 * eps)
            throw geometry_error("figure-eight crossing without a base point");
          DoubledPoint dp;
          dp.base_id = best;
          dp.alpha_index = a;
          dp.beta_index = bi + 1;
          dp.position = Pt(hit.x, Rat(0));
          dp.e_param = hit.param;
          sys.points.push_back(dp);
          seen[best]++;
        }
        for (const auto& p : sys.base) {
          if (p.beta_index != bi + 1) continue;
          int want = p.is_puncture ? 1 : 2;
          if (seen[p.id] != want)
            throw geometry_error("doubled-point count mismatch at a crossing");
        }
      }
      break;
    } catch (const geometry_error&) {
      if (attempt == 39) throw;
      eps /= 2;
    }
  }

  // prime assignment: for each non-puncture base, the winding rule
  for (const auto& p : sys.base) {
    if (p.is_puncture) continue;
    DoubledPoint* d1 = nullptr;
    DoubledPoint* d2 = nullptr;
    for (auto& dp : sys.points)
      if (dp.base_id == p.id) (d1 ? d2 : d1) = &dp;
    const FigureEight& fe = sys.eights[p.beta_index - 1];
    // route between the pair avoiding the self-crossing passes
    int n = fe.curve.segment_count();
    auto in_forbidden = [&](const Rat& t) {
      return t > fe.cross_param_1 && t < fe.cross_param_2;
    };
    if (in_forbidden(d1->e_param) || in_forbidden(d2->e_param))
      throw geometry_error("doubled point inside the crossover span");
    // forward walk from t1 enters the forbidden interval iff it passes cross_param_1
    auto forward_passes = [&](const Rat& a, const Rat& b, const Rat& x) {
      // walking forward from a to b (mod n), do we pass x?
      if (a <= b) return x > a && x < b;
      return x > a || x < b;
    };
    bool fwd_safe = !forward_passes(d1->e_param, d2->e_param, fe.cross_param_1) &&
                    !forward_passes(d1->e_param, d2->e_param, fe.cross_param_2);
    std::vector<Pt> route =
        arc_between(fe.curve, d1->e_param, d2->e_param, fwd_safe);
    (void)n;
    PLCurve loop;
    loop.closed = true;
    loop.v = route;  // return leg along the axis closes the loop
    simplify_curve(loop);
    int w = winding_number(loop, fe.start_puncture);
    if (w == 1) {
      d1->primed = false;
      d2->primed = true;
    } else if (w == -1) {
      d1->primed = true;
      d2->primed = false;
    } else {
      throw geometry_error("e/e' winding rule gave winding " + std::to_string(w));
    }
  }

  // canonical order, ids, labels, nu
  std::sort(sys.points.begin(), sys.points.end(),
            [](const DoubledPoint& a, const DoubledPoint& b) {
              if (a.alpha_index != b.alpha_index) return a.alpha_index < b.alpha_index;
              return a.position.x < b.position.x;
            });
  for (size_t i = 0; i < sys.points.size(); ++i) sys.points[i].id = static_cast<int>(i);

  // labels: one letter per (alpha, beta) incidence class, numbered along the
  // alpha by base position, prime for the e' branch
  std::map<std::pair<int, int>, char> letters;
  for (const auto& p : sys.points) {
    auto key = std::make_pair(p.alpha_index, p.beta_index);
    if (!letters.count(key))
      letters[key] = static_cast<char>('a' + (letters.size() % 26));
  }
  std::map<std::pair<int, int>, std::vector<int>> class_bases;
  for (const auto& b : sys.base)
    class_bases[{b.alpha_index, b.beta_index}].push_back(b.id);
  std::map<int, int> base_rank;
  for (auto& [key, list] : class_bases) {
    std::sort(list.begin(), list.end(), [&](int x, int y) {
      return sys.base[x].alpha_order < sys.base[y].alpha_order;
    });
    for (size_t i = 0; i < list.size(); ++i) base_rank[list[i]] = static_cast<int>(i) + 1;
  }
  for (auto& dp : sys.points) {
    char c = letters[{dp.alpha_index, dp.beta_index}];
    dp.label = std::string(1, c) + std::to_string(base_rank[dp.base_id]) +
               (dp.primed ? "'" : "");
  }

  for (int bi = 0; bi < active; ++bi) {
    Pt even(Rat(2 * (bi + 1)), Rat(0));
    for (const auto& dp : sys.points) {
      if (dp.beta_index != bi + 1) continue;
      const auto& b = sys.base[dp.base_id];
      if (b.is_puncture && b.position == even) sys.nu[bi] = dp.id;
    }
    if (sys.nu[bi] < 0) throw geometry_error("missing nu point");
  }
  return sys;
}

const DoubledPoint& point_for_base(const FigureEightSystem& sys, int base_id,
                                   bool primed) {
  for (const auto& dp : sys.points)
    if (dp.base_id == base_id && dp.primed == primed) return dp;
  throw identity_error("no doubled point for base");
}

}  // namespace jones
