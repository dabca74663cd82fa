#include "jones/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "jones/errors.hpp"

namespace jones {

namespace {

Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }

// Squared distance from segment [a,b] to every beta segment except the
// listed (curve, segment) exclusions, and to every puncture. Used to size
// normalization jogs. Double-precision prefilter keeps it cheap.
struct ClearanceQuery {
  const FlattenedDiagram& d;
  std::vector<std::pair<int, int>> excluded;  // (beta index, segment index)

  bool is_excluded(int c, int s) const {
    return std::find(excluded.begin(), excluded.end(), std::make_pair(c, s)) !=
           excluded.end();
  }

  Rat min_sq_dist(const Pt& a, const Pt& b, const Rat& cap) const {
    Rat best = cap;
    double ax = to_double(a.x), ay = to_double(a.y);
    double bx = to_double(b.x), by = to_double(b.y);
    for (int c = 0; c < static_cast<int>(d.betas.size()); ++c) {
      const PLCurve& curve = d.betas[c];
      int n = curve.segment_count();
      for (int s = 0; s < n; ++s) {
        if (is_excluded(c, s)) continue;
        const Pt& p = curve.seg_a(s);
        const Pt& q = curve.seg_b(s);
        // coarse reject: bounding-box gap clearly above current best
        double bd = to_double(best);
        double lo_x = std::min(to_double(p.x), to_double(q.x));
        double hi_x = std::max(to_double(p.x), to_double(q.x));
        double lo_y = std::min(to_double(p.y), to_double(q.y));
        double hi_y = std::max(to_double(p.y), to_double(q.y));
        double gx = std::max({lo_x - std::max(ax, bx), std::min(ax, bx) - hi_x, 0.0});
        double gy = std::max({lo_y - std::max(ay, by), std::min(ay, by) - hi_y, 0.0});
        if (gx * gx + gy * gy > bd * 4 + 1e-9) continue;
        Rat dd = sq_dist_segments(a, b, p, q);
        if (dd < best) best = dd;
      }
    }
    for (const Rat& px : d.punctures) {
      Pt p(px, Rat(0));
      Rat dd = sq_dist_point_segment(p, a, b);
      if (dd < best) best = dd;
    }
    return best;
  }

  Rat min_sq_dist_point(const Pt& p, const Rat& cap) const {
    return min_sq_dist(p, p, cap);
  }
};

// Conservative rational lower bound for sqrt(s2), good enough for jog sizing.
Rat sqrt_lower_bound(const Rat& s2) {
  if (s2 <= 0) return Rat(0);
  double approx = std::sqrt(to_double(s2));
  Rat r(approx * 0.9375);
  r.canonicalize();
  if (r <= 0 || r * r >= s2) {
    // fall back to halving until safe
    r = Rat(1);
    while (r * r >= s2) r /= 2;
  }
  return r;
}

int sign_of(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// ---- axis normalization -------------------------------------------------

// Push maximal on-axis runs of beta bi off the axis and lift tangential
// vertices, so that afterwards the curve touches the axis only at transverse
// crossings and its two endpoints.
void push_axis_runs(FlattenedDiagram& d, int bi) {
  PLCurve& c = d.betas[bi];
  bool changed = true;
  while (changed) {
    changed = false;
    int n = static_cast<int>(c.v.size());
    int i = 0;
    while (i < n) {
      if (c.v[i].y != 0) {
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 < n && c.v[j + 1].y == 0) ++j;
      bool at_start = (i == 0);
      bool at_end = (j == n - 1);
      bool has_run_segment = j > i;
      if (!has_run_segment && !at_start && !at_end) {
        int s_in = sign_of(c.v[i - 1].y);
        int s_out = sign_of(c.v[i + 1].y);
        if (s_in != s_out) {
          ++i;  // clean transverse crossing at a vertex
          continue;
        }
        // tangential touch: lift the vertex to the common side
        ClearanceQuery q{d, {{bi, i - 1}, {bi, i}}};
        Rat cap = rat_min(Rat(1, 16), rat_min(abs(c.v[i - 1].y), abs(c.v[i + 1].y)));
        Rat h = rat_min(sqrt_lower_bound(q.min_sq_dist_point(c.v[i], cap * cap)), cap) / 4;
        if (h <= 0) throw geometry_error("axis touch cannot be lifted");
        c.v[i].y = Rat(s_in) * h;
        changed = true;
        break;
      }
      if (!has_run_segment) {
        ++i;  // endpoint vertex alone on the axis (a puncture): fine
        continue;
      }

      // run with at least one on-axis segment: v[i..j]
      ClearanceQuery q{d, {}};
      for (int s = std::max(0, i - 1); s <= std::min(n - 2, j); ++s)
        q.excluded.emplace_back(bi, s);
      Rat cap(1, 4);
      Rat clear2 = q.min_sq_dist(c.v[i], c.v[j], cap * cap);
      Rat h = sqrt_lower_bound(clear2) / 4;
      if (h <= 0) throw geometry_error("axis run cannot be pushed off");

      std::vector<Pt> repl;
      if (at_start && at_end) {
        // whole curve on the axis (identity-like): bow it below
        Rat x0 = c.v.front().x, x1 = c.v.back().x;
        repl = {c.v.front(), Pt((3 * x0 + x1) / 4, -h), Pt((x0 + 3 * x1) / 4, -h),
                c.v.back()};
        c.v = repl;
        changed = true;
        break;
      }
      int s_in = at_start ? 0 : sign_of(c.v[i - 1].y);
      int s_out = at_end ? 0 : sign_of(c.v[j + 1].y);
      int side = s_in != 0 ? s_in : s_out;
      std::vector<Pt> nv(c.v.begin(), c.v.begin() + i);
      if (at_start) nv.push_back(c.v[i]);  // keep the puncture endpoint
      for (int k = i; k <= j; ++k) {
        if ((k == i && at_start) || (k == j && at_end)) continue;
        nv.push_back(Pt(c.v[k].x, Rat(side) * h));
      }
      if (!at_start && !at_end && s_in != s_out) {
        // one transverse crossing, placed at the run's exit
        nv.push_back(Pt(c.v[j].x, Rat(s_in) * h));
        nv.push_back(Pt(c.v[j].x, Rat(s_out) * h));
      }
      if (at_end) nv.push_back(c.v[j]);
      nv.insert(nv.end(), c.v.begin() + j + 1, c.v.end());
      c.v = nv;
      simplify_curve(c);
      changed = true;
      break;
    }
    if (changed) continue;
  }
}

struct AxisEvent {
  Rat x;
  Rat param;       // along the beta: segment index + fraction
  bool at_vertex;  // crossing exactly at a vertex
  int vertex_or_seg;
};

// All points where beta bi meets the axis, endpoints excluded.
std::vector<AxisEvent> axis_crossings(const PLCurve& c) {
  std::vector<AxisEvent> out;
  int n = c.segment_count();
  for (int s = 0; s < n; ++s) {
    const Pt& a = c.seg_a(s);
    const Pt& b = c.seg_b(s);
    if (a.y == 0 && b.y == 0)
      throw geometry_error("beta overlaps the axis (normalization failure)");
    if (a.y == 0) {
      if (s > 0)
        out.push_back({a.x, Rat(s), true, s});
      continue;
    }
    if (b.y == 0) continue;  // recorded when it opens the next segment
    if ((a.y > 0) == (b.y > 0)) continue;
    Rat t = a.y / (a.y - b.y);
    Rat x = a.x + t * (b.x - a.x);
    out.push_back({x, Rat(s) + t, false, s});
  }
  return out;
}

// Make beta bi cross the axis vertically at every crossing and approach both
// endpoint punctures vertically.
void verticalize_beta(FlattenedDiagram& d, int bi) {
  // Collect every axis feature once so jog squares stay pairwise disjoint.
  std::vector<Rat> features;  // x-positions on the axis
  for (const Rat& px : d.punctures) features.push_back(px);
  for (const PLCurve& c : d.betas)
    for (const AxisEvent& e : axis_crossings(c)) features.push_back(e.x);

  auto feature_gap = [&features](const Rat& x) {
    Rat best(-1);
    for (const Rat& f : features) {
      if (f == x) continue;
      Rat g = abs(f - x);
      if (best < 0 || g < best) best = g;
    }
    return best < 0 ? Rat(1) : best;
  };

  PLCurve& c = d.betas[bi];

  // interior crossings, processed one at a time (indices shift after edits)
  bool changed = true;
  while (changed) {
    changed = false;
    auto evs = axis_crossings(c);
    for (const AxisEvent& e : evs) {
      // already vertical? (crossing segment is vertical)
      if (!e.at_vertex) {
        const Pt& a = c.seg_a(e.vertex_or_seg);
        const Pt& b = c.seg_b(e.vertex_or_seg);
        if (a.x == b.x) continue;
      } else {
        const Pt& pv = c.v[e.vertex_or_seg];
        const Pt& pm = c.v[e.vertex_or_seg - 1];
        const Pt& pp = c.v[e.vertex_or_seg + 1];
        if (pm.x == pv.x && pp.x == pv.x) continue;
      }
      Pt P(e.x, Rat(0));
      // local clearance: other features along the axis, everything else nearby
      Rat r = feature_gap(e.x) / 2;
      ClearanceQuery q{d, {}};
      int lo = e.at_vertex ? e.vertex_or_seg - 1 : e.vertex_or_seg;
      int hi = e.at_vertex ? e.vertex_or_seg : e.vertex_or_seg;
      for (int s = lo; s <= hi; ++s) q.excluded.emplace_back(bi, s);
      r = rat_min(r, sqrt_lower_bound(q.min_sq_dist_point(P, r * r)));
      r = rat_min(r, Rat(1, 4));
      if (r <= 0) throw geometry_error("crossing too crowded to verticalize");
      Rat half = r / 2;

      // walk outwards from the crossing to the square boundary on both sides
      auto clip_to_square = [&](int seg, const Pt& inner, const Pt& outer) {
        // first point along [inner,outer] hitting |x-e.x| = half or |y| = half
        Rat best(1);
        Pt dir = outer - inner;
        for (int side = -1; side <= 1; side += 2) {
          if (dir.x != 0) {
            Rat t = (e.x + Rat(side) * half - inner.x) / dir.x;
            if (t > 0 && t < best) best = t;
          }
          if (dir.y != 0) {
            Rat t = (Rat(side) * half - inner.y) / dir.y;
            if (t > 0 && t < best) best = t;
          }
        }
        (void)seg;
        return inner + best * dir;
      };

      std::vector<Pt> nv;
      if (!e.at_vertex) {
        int s = e.vertex_or_seg;
        Pt a = c.seg_a(s), b = c.seg_b(s);
        Pt E1 = clip_to_square(s, P, a);  // entry, walking backwards
        Pt E2 = clip_to_square(s, P, b);
        nv.assign(c.v.begin(), c.v.begin() + s + 1);
        nv.push_back(E1);
        nv.push_back(Pt(e.x, Rat(sign_of(E1.y)) * half));
        nv.push_back(Pt(e.x, Rat(sign_of(E2.y)) * half));
        nv.push_back(E2);
        nv.insert(nv.end(), c.v.begin() + s + 1, c.v.end());
      } else {
        int vi = e.vertex_or_seg;
        Pt E1 = clip_to_square(vi - 1, P, c.v[vi - 1]);
        Pt E2 = clip_to_square(vi, P, c.v[vi + 1]);
        nv.assign(c.v.begin(), c.v.begin() + vi);
        nv.push_back(E1);
        nv.push_back(Pt(e.x, Rat(sign_of(E1.y)) * half));
        nv.push_back(Pt(e.x, Rat(sign_of(E2.y)) * half));
        nv.push_back(E2);
        nv.insert(nv.end(), c.v.begin() + vi + 1, c.v.end());
      }
      c.v = nv;
      simplify_curve(c);
      changed = true;
      break;
    }
  }

  // endpoint approaches
  for (int end = 0; end < 2; ++end) {
    if (end == 1) std::reverse(c.v.begin(), c.v.end());
    Pt Q = c.v.front();
    Rat r = feature_gap(Q.x) / 2;
    ClearanceQuery q{d, {{bi, 0}}};
    r = rat_min(r, sqrt_lower_bound(q.min_sq_dist_point(Q, r * r)));
    r = rat_min(r, Rat(1, 4));
    if (r <= 0) throw geometry_error("endpoint too crowded to verticalize");
    Rat half = r / 2;
    // already vertical?
    if (c.v[1].x == Q.x) {
      if (end == 1) std::reverse(c.v.begin(), c.v.end());
      continue;
    }
    // walk from the endpoint to the first exit of the square
    size_t k = 1;
    Pt prev = Q;
    Pt exit_pt = Q;
    bool found = false;
    while (k < c.v.size() && !found) {
      Pt cur = c.v[k];
      Pt dir = cur - prev;
      Rat best(2);
      for (int side = -1; side <= 1; side += 2) {
        if (dir.x != 0) {
          Rat t = (Q.x + Rat(side) * half - prev.x) / dir.x;
          if (t > 0 && t <= 1 && t < best) best = t;
        }
        if (dir.y != 0) {
          Rat t = (Rat(side) * half - prev.y) / dir.y;
          if (t > 0 && t <= 1 && t < best) best = t;
        }
      }
      if (best <= 1) {
        exit_pt = prev + best * dir;
        found = true;
        // replace prefix [Q .. exit] by vertical approach
        std::vector<Pt> nv;
        nv.push_back(Q);
        nv.push_back(Pt(Q.x, Rat(sign_of(exit_pt.y)) * half));
        nv.push_back(exit_pt);
        nv.insert(nv.end(), c.v.begin() + k, c.v.end());
        c.v = nv;
      } else {
        prev = cur;
        ++k;
      }
    }
    if (!found) throw geometry_error("beta never leaves its endpoint square");
    simplify_curve(c);
    if (end == 1) std::reverse(c.v.begin(), c.v.end());
  }
}

void normalize_betas(FlattenedDiagram& d) {
  int m = d.m;
  for (int bi = 0; bi < m; ++bi) push_axis_runs(d, bi);
  // orient each beta to end at its even puncture 2k
  for (int k = 1; k <= m; ++k) {
    PLCurve& c = d.betas[k - 1];
    Pt even(Rat(2 * k), Rat(0));
    if (c.v.front() == even) std::reverse(c.v.begin(), c.v.end());
    if (c.v.back() != even)
      throw geometry_error("beta " + std::to_string(k) +
                           " does not end at its even puncture");
  }
  for (int bi = 0; bi < m; ++bi) verticalize_beta(d, bi);
}

}  // namespace

FlattenedDiagram standard_matching(int m) {
  if (m < 1) throw input_error("m must be positive");
  FlattenedDiagram d;
  d.m = m;
  d.boundary_radius = Rat(2 * m + 2);
  for (int k = 1; k <= 2 * m; ++k) d.punctures.push_back(Rat(k));
  for (int k = 1; k <= m; ++k) {
    PLCurve a;
    a.v = {Pt(Rat(2 * k - 1), Rat(0)), Pt(Rat(2 * k), Rat(0))};
    d.alphas.push_back(a);
    d.betas.push_back(a);
    PLCurve h;
    h.v = {d.alpha_midpoint(k), d.handle_foot(k)};
    d.handles.push_back(h);
  }
  return d;
}

FlattenedDiagram apply_braid(const FlattenedDiagram& d, const BraidWord& plat,
                             const TwistConvention& conv) {
  if (plat.strands != 2 * d.m)
    throw input_error("plat word must act on 2m strands");
  FlattenedDiagram out = d;
  out.betas = out.alphas;
  auto word = expand_plat_word(plat, conv);
  for (const ElementaryTwist& t : word)
    for (PLCurve& b : out.betas) b = twist_curve(b, t);
  normalize_betas(out);
  return out;
}

std::vector<IntersectionPoint> enumerate_intersections(const FlattenedDiagram& d) {
  std::vector<IntersectionPoint> pts;
  int m = d.m;
  auto alpha_of = [&](const Rat& x) -> int {
    // alpha i spans [2i-1, 2i]
    if (x < 1 || x > 2 * m) return 0;
    mpz_class fl = x.get_num() / x.get_den();  // floor for positive x
    long f = fl.get_si();
    if (Rat(f) == x) {
      // exactly at a puncture position
      return -static_cast<int>(f);
    }
    return (f % 2 == 1) ? static_cast<int>((f + 1) / 2) : 0;
  };

  for (int j = 1; j <= m; ++j) {
    const PLCurve& c = d.betas[j - 1];
    // endpoints
    for (int end = 0; end < 2; ++end) {
      const Pt& q = end == 0 ? c.v.front() : c.v.back();
      int a = alpha_of(q.x);
      if (a >= 0) throw geometry_error("beta endpoint not at a puncture");
      long p = -a;
      int ai = static_cast<int>((p + 1) / 2);
      IntersectionPoint ip;
      ip.position = q;
      ip.alpha_index = ai;
      ip.beta_index = j;
      ip.is_puncture = true;
      ip.beta_param = end == 0 ? Rat(0) : Rat(c.segment_count());
      pts.push_back(ip);
    }
    for (const AxisEvent& e : axis_crossings(c)) {
      int a = alpha_of(e.x);
      if (a < 0) throw geometry_error("beta passes through a puncture");
      if (a == 0) continue;  // axis crossing in a gap
      IntersectionPoint ip;
      ip.position = Pt(e.x, Rat(0));
      ip.alpha_index = a;
      ip.beta_index = j;
      ip.is_puncture = false;
      ip.beta_param = e.param;
      pts.push_back(ip);
    }
  }

  std::sort(pts.begin(), pts.end(), [](const IntersectionPoint& a,
                                       const IntersectionPoint& b) {
    if (a.alpha_index != b.alpha_index) return a.alpha_index < b.alpha_index;
    return a.position.x < b.position.x;
  });
  for (size_t i = 0; i + 1 < pts.size(); ++i)
    if (pts[i].alpha_index == pts[i + 1].alpha_index &&
        pts[i].position.x == pts[i + 1].position.x)
      throw geometry_error("coincident intersection points");
  int prev_alpha = 0, rank = 0;
  for (auto& p : pts) {
    if (p.alpha_index != prev_alpha) {
      prev_alpha = p.alpha_index;
      rank = 0;
    }
    p.alpha_order = rank++;
  }
  // beta orders and ids
  std::map<int, std::vector<IntersectionPoint*>> by_beta;
  for (auto& p : pts) by_beta[p.beta_index].push_back(&p);
  for (auto& [b, list] : by_beta) {
    std::sort(list.begin(), list.end(),
              [](auto* x, auto* y) { return x->beta_param < y->beta_param; });
    for (size_t i = 0; i < list.size(); ++i) list[i]->beta_order = static_cast<int>(i);
  }
  for (size_t i = 0; i < pts.size(); ++i) pts[i].id = static_cast<int>(i);
  return pts;
}

// ---- bigon reduction -----------------------------------------------------

namespace {

// Extract the sub-polyline of c between params p1 < p2.
std::vector<Pt> subpath(const PLCurve& c, const Rat& p1, const Rat& p2) {
  std::vector<Pt> out;
  int n = c.segment_count();
  for (int s = 0; s <= n; ++s) {
    Rat here(s);
    if (here > p1 && here < p2) out.push_back(c.v[s]);
  }
  auto point_at = [&](const Rat& p) {
    long s = mpz_class(p.get_num() / p.get_den()).get_si();
    if (Rat(s) == p) return c.v[s];
    Rat f = p - Rat(s);
    return lerp(c.v[s], c.v[s + 1], f);
  };
  out.insert(out.begin(), point_at(p1));
  out.push_back(point_at(p2));
  return out;
}

int side_just_before(const PLCurve& c, const Rat& param) {
  // the beta is vertical at crossings, so sample slightly before the param
  long s = mpz_class(param.get_num() / param.get_den()).get_si();
  Rat f = param - Rat(s);
  if (f > 0) {
    Pt p = lerp(c.v[s], c.v[s + 1], f / 2);
    if (p.y != 0) return sign_of(p.y);
  }
  for (long k = s; k >= 0; --k) {
    if (c.v[k].y != 0) return sign_of(c.v[k].y);
    if (Rat(k) < param - 1) break;
  }
  throw geometry_error("cannot determine side before crossing");
}

int side_just_after(const PLCurve& c, const Rat& param) {
  long s = mpz_class(param.get_num() / param.get_den()).get_si();
  Rat f = param - Rat(s);
  if (f > 0) {
    Pt p = lerp(c.v[s], c.v[s + 1], f + (1 - f) / 2);
    if (p.y != 0) return sign_of(p.y);
  }
  int n = static_cast<int>(c.v.size());
  for (long k = s + (f > 0 ? 1 : 1); k < n; ++k) {
    if (c.v[k].y != 0) return sign_of(c.v[k].y);
    if (Rat(k) > param + 1) break;
  }
  throw geometry_error("cannot determine side after crossing");
}

bool try_remove_one_bigon(FlattenedDiagram& d) {
  auto pts = enumerate_intersections(d);
  // group by alpha, already ordered by alpha_order
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    const auto& c1 = pts[i];
    const auto& c2 = pts[i + 1];
    if (c1.alpha_index != c2.alpha_index) continue;
    if (c1.is_puncture || c2.is_puncture) continue;
    if (c1.beta_index != c2.beta_index) continue;
    if (std::abs(c1.beta_order - c2.beta_order) != 1) continue;
    PLCurve& beta = d.betas[c1.beta_index - 1];
    Rat p1 = c1.beta_param, p2 = c2.beta_param;
    const IntersectionPoint* e1 = &c1;
    const IntersectionPoint* e2 = &c2;
    if (p1 > p2) {
      std::swap(p1, p2);
      std::swap(e1, e2);
    }
    int s_before = side_just_before(beta, p1);
    int s_after = side_just_after(beta, p2);
    if (s_before != s_after) continue;

    // enclosed region must contain no punctures
    std::vector<Pt> arc = subpath(beta, p1, p2);
    PLCurve loop;
    loop.closed = true;
    loop.v = arc;
    loop.v.push_back(arc.front());  // close along the axis, e2 -> e1
    loop.v.pop_back();
    loop.v.push_back(Pt(e1->position.x, Rat(0)));
    // arc already starts at e1 and ends at e2; appended point closes it
    bool enclosed = false;
    simplify_curve(loop);
    if (loop.v.size() >= 3) {
      for (const Rat& px : d.punctures) {
        Pt p(px, Rat(0));
        if (px == e1->position.x || px == e2->position.x) continue;
        bool on_boundary = px > rat_min(e1->position.x, e2->position.x) &&
                           px < (e1->position.x > e2->position.x ? e1->position.x
                                                                 : e2->position.x);
        if (on_boundary) {
          enclosed = true;  // puncture on the closing axis segment
          break;
        }
        if (winding_number(loop, p) != 0) {
          enclosed = true;
          break;
        }
      }
    }
    if (enclosed) continue;

    // corridor depth on side s_before
    ClearanceQuery q{d, {}};
    {
      // exclude the removed sub-path and the two incident verticals
      long s1 = mpz_class(p1.get_num() / p1.get_den()).get_si();
      long s2 = mpz_class(p2.get_num() / p2.get_den()).get_si();
      for (long s = std::max<long>(0, s1 - 1); s <= s2 + 1 && s < beta.segment_count(); ++s)
        q.excluded.emplace_back(c1.beta_index - 1, static_cast<int>(s));
    }
    Pt a1(e1->position.x, Rat(0)), a2(e2->position.x, Rat(0));
    Rat clear2 = q.min_sq_dist(a1, a2, Rat(1, 16));
    Rat g = sqrt_lower_bound(clear2) / 2;
    // stay within the vertical jogs of both crossings
    auto vertical_extent = [&](const Rat& param, int dir) {
      // length of the vertical run adjacent to the crossing
      long s = mpz_class(param.get_num() / param.get_den()).get_si();
      Rat f = param - Rat(s);
      Pt lo, hi;
      if (f > 0) {
        lo = beta.v[s];
        hi = beta.v[s + 1];
      } else {
        lo = beta.v[s - 1];
        hi = beta.v[s];
      }
      (void)dir;
      Rat ay = abs(lo.y), by = abs(hi.y);
      return rat_min(ay == 0 ? by : ay, by == 0 ? ay : by);
    };
    g = rat_min(g, vertical_extent(p1, -1) / 2);
    g = rat_min(g, vertical_extent(p2, 1) / 2);
    if (g <= 0) continue;

    // cut points on the two verticals at depth g, side s_before
    Pt A(e1->position.x, Rat(s_before) * g);
    Pt B(e2->position.x, Rat(s_before) * g);
    // find params of A and B on the beta (on the vertical segments around p1/p2)
    auto param_at_depth = [&](const Rat& param, bool before) -> Rat {
      long s = mpz_class(param.get_num() / param.get_den()).get_si();
      Rat f = param - Rat(s);
      int seg = (f > 0) ? static_cast<int>(s) : static_cast<int>(s) - (before ? 1 : 0);
      // search outward for the segment containing y = +-g on the right side
      int dir = before ? -1 : 1;
      for (int k = seg; k >= 0 && k < beta.segment_count(); k += dir) {
        const Pt& pa = beta.seg_a(k);
        const Pt& pb = beta.seg_b(k);
        Rat target = Rat(s_before) * g;
        if ((pa.y - target) * (pb.y - target) <= 0 && pa.y != pb.y) {
          Rat t = (target - pa.y) / (pb.y - pa.y);
          if (t >= 0 && t <= 1) {
            Rat cand = Rat(k) + t;
            if (before ? cand <= param : cand >= param) return cand;
          }
        }
        if (std::abs(k - seg) > 3) break;
      }
      throw geometry_error("bigon corridor cut not found");
    };
    Rat pa, pb;
    try {
      pa = param_at_depth(p1, true);
      pb = param_at_depth(p2, false);
    } catch (const geometry_error&) {
      continue;
    }

    // rebuild the beta: prefix + [A, B] + suffix
    std::vector<Pt> nv;
    int n = beta.segment_count();
    for (int s = 0; s <= n; ++s) {
      if (Rat(s) <= pa) nv.push_back(beta.v[s]);
    }
    {
      long s = mpz_class(pa.get_num() / pa.get_den()).get_si();
      Rat f = pa - Rat(s);
      if (f > 0) nv.push_back(lerp(beta.v[s], beta.v[s + 1], f));
    }
    nv.push_back(B);
    {
      long s = mpz_class(pb.get_num() / pb.get_den()).get_si();
      Rat f = pb - Rat(s);
      if (f > 0) nv.push_back(lerp(beta.v[s], beta.v[s + 1], f));
      for (int k = static_cast<int>(s) + 1; k <= n; ++k) nv.push_back(beta.v[k]);
    }
    beta.v = nv;
    simplify_curve(beta);
    return true;
  }
  return false;
}

}  // namespace

void reduce_bigons(FlattenedDiagram& d) {
  while (try_remove_one_bigon(d)) {
  }
}

void insert_artificial_bigon(FlattenedDiagram& d, int beta_index) {
  PLCurve& c = d.betas[beta_index - 1];
  // final approach is vertical: ... -> (qx, s*half) -> (qx, 0)
  Pt Q = c.v.back();
  Pt pre = c.v[c.v.size() - 2];
  if (pre.x != Q.x) throw geometry_error("endpoint approach not vertical");
  int s = sign_of(pre.y);
  Rat half = abs(pre.y);
  // existing events on this alpha, to stay clear of them
  auto pts = enumerate_intersections(d);
  Rat w = half;  // horizontal extent of the zigzag, kept inside clear space
  for (const auto& p : pts) {
    if (p.alpha_index != beta_index) continue;
    Rat dx = abs(p.position.x - Q.x);
    if (dx > 0 && dx / 2 < w) w = dx / 2;
  }
  Rat g = half / 2;
  std::vector<Pt> nv(c.v.begin(), c.v.end() - 1);
  nv.push_back(Pt(Q.x - w, Rat(s) * g));
  nv.push_back(Pt(Q.x - w, Rat(-s) * g));
  nv.push_back(Pt(Q.x - w / 2, Rat(-s) * g));
  nv.push_back(Pt(Q.x - w / 2, Rat(s) * g));
  nv.push_back(Pt(Q.x, Rat(s) * g));
  nv.push_back(Q);
  c.v = nv;
  simplify_curve(c);
}

void validate_diagram(const FlattenedDiagram& d) {
  int m = d.m;
  std::vector<Rat> endpoint_xs;
  for (int b = 0; b < m; ++b) {
    const PLCurve& c = d.betas[b];
    if (c.v.size() < 2) throw geometry_error("degenerate beta");
    if (c.v.front().y != 0 || c.v.back().y != 0)
      throw geometry_error("beta endpoint off the axis");
    endpoint_xs.push_back(c.v.front().x);
    endpoint_xs.push_back(c.v.back().x);
    int n = c.segment_count();
    for (int s = 0; s < n; ++s)
      for (int t = s + 2; t < n; ++t) {
        if (s == 0 && t == n - 1) {
          // end segments may share nothing (open arc), still check
        }
        bool overlap = false;
        auto hit = segment_intersection(c.seg_a(s), c.seg_b(s), c.seg_a(t),
                                        c.seg_b(t), &overlap);
        if (hit || overlap) throw geometry_error("beta self-intersects");
      }
  }
  std::sort(endpoint_xs.begin(), endpoint_xs.end());
  std::vector<Rat> want = d.punctures;
  std::sort(want.begin(), want.end());
  if (endpoint_xs != want)
    throw geometry_error("beta endpoints are not the puncture set");
  for (int b = 0; b < m; ++b)
    for (int b2 = b + 1; b2 < m; ++b2) {
      const PLCurve& c1 = d.betas[b];
      const PLCurve& c2 = d.betas[b2];
      for (int s = 0; s < c1.segment_count(); ++s)
        for (int t = 0; t < c2.segment_count(); ++t) {
          bool overlap = false;
          auto hit = segment_intersection(c1.seg_a(s), c1.seg_b(s), c2.seg_a(t),
                                          c2.seg_b(t), &overlap);
          if (hit || overlap) throw geometry_error("betas intersect each other");
        }
    }
}

// ---- serialization -------------------------------------------------------

std::string serialize_diagram(const FlattenedDiagram& d) {
  std::ostringstream out;
  out << "flattened-diagram v1\n";
  out << "m " << d.m << "\n";
  out << "boundary " << rat_to_string(d.boundary_radius) << "\n";
  out << "punctures";
  for (const Rat& p : d.punctures) out << " " << rat_to_string(p);
  out << "\n";
  auto dump = [&out](const char* name, const PLCurve& c) {
    out << name << " " << c.v.size() << "\n";
    for (const Pt& p : c.v)
      out << rat_to_string(p.x) << " " << rat_to_string(p.y) << "\n";
  };
  for (const PLCurve& c : d.alphas) dump("alpha", c);
  for (const PLCurve& c : d.betas) dump("beta", c);
  for (const PLCurve& c : d.handles) dump("handle", c);
  return out.str();
}

FlattenedDiagram deserialize_diagram(const std::string& text) {
  std::istringstream in(text);
  std::string line, tok;
  if (!std::getline(in, line) || line != "flattened-diagram v1")
    throw input_error("bad diagram header");
  FlattenedDiagram d;
  std::string key;
  in >> key;
  if (key != "m") throw input_error("expected m");
  in >> d.m;
  in >> key;
  if (key != "boundary") throw input_error("expected boundary");
  in >> tok;
  d.boundary_radius = rat_from_string(tok);
  in >> key;
  if (key != "punctures") throw input_error("expected punctures");
  for (int i = 0; i < 2 * d.m; ++i) {
    in >> tok;
    d.punctures.push_back(rat_from_string(tok));
  }
  while (in >> key) {
    size_t n;
    in >> n;
    PLCurve c;
    for (size_t i = 0; i < n; ++i) {
      std::string xs, ys;
      in >> xs >> ys;
      c.v.push_back(Pt(rat_from_string(xs), rat_from_string(ys)));
    }
    if (key == "alpha")
      d.alphas.push_back(c);
    else if (key == "beta")
      d.betas.push_back(c);
    else if (key == "handle")
      d.handles.push_back(c);
    else
      throw input_error("unknown curve kind: " + key);
  }
  if (static_cast<int>(d.alphas.size()) != d.m || static_cast<int>(d.betas.size()) != d.m)
    throw input_error("curve counts do not match m");
  return d;
}

}  // namespace jones
