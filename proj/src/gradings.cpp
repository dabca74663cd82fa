#include "jones/gradings.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "jones/errors.hpp"

namespace jones {

namespace {

// Orientation of the diagonal-linking pairing; pinned by the trefoil tables.
constexpr int kTSign = 1;

long rat_floor(const Rat& t) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
  return q.get_si();
}

Pt beta_point_at(const PLCurve& c, const Rat& param) {
  long s = rat_floor(param);
  int n = c.segment_count();
  if (s >= n) return c.v.back();
  Rat f = param - Rat(s);
  return lerp(c.v[s], c.v[s + 1], f);
}

}  // namespace

int q_star(const FlattenedDiagram& d, const FigureEightSystem& sys, int point_id) {
  const DoubledPoint& e = sys.points[point_id];
  int j = e.beta_index;
  int i = e.alpha_index;
  const FigureEight& fe = sys.eights[j - 1];
  const DoubledPoint& nu = sys.points[sys.nu[j - 1]];

  PLCurve loop;
  loop.closed = true;
  // nu_j -> e along the figure eight
  loop.v = arc_between(fe.curve, nu.e_param, e.e_param, true);
  // along alpha_i to its midpoint, down the handle, across the lower
  // boundary, up handle j, along alpha_j back to nu_j (the wrap edge)
  loop.v.push_back(d.alpha_midpoint(i));
  loop.v.push_back(d.handle_foot(i));
  if (i != j) {
    loop.v.push_back(d.handle_foot(j));
    loop.v.push_back(d.alpha_midpoint(j));
  } else {
    loop.v.push_back(d.alpha_midpoint(j));
  }
  simplify_curve(loop);

  int total = 0;
  for (const Rat& px : d.punctures) total += winding_number(loop, Pt(px, Rat(0)));
  return total;
}

int p_star(const FigureEightSystem& sys, int point_id) {
  const DoubledPoint& e = sys.points[point_id];
  const FigureEight& fe = sys.eights[e.beta_index - 1];
  const DoubledPoint& nu = sys.points[sys.nu[e.beta_index - 1]];
  if (nu.id == e.id) return 0;
  std::vector<Pt> path = arc_between(fe.curve, nu.e_param, e.e_param, true);
  double total = 0;
  double prev = 0;
  bool have_prev = false;
  for (size_t k = 0; k + 1 < path.size(); ++k) {
    Pt dvec = path[k + 1] - path[k];
    if (dvec.x == 0 && dvec.y == 0) continue;
    double ang = std::atan2(to_double(dvec.y), to_double(dvec.x));
    if (have_prev) {
      double delta = ang - prev;
      while (delta > M_PI) delta -= 2 * M_PI;
      while (delta <= -M_PI) delta += 2 * M_PI;
      total += delta;
    }
    prev = ang;
    have_prev = true;
  }
  double half_turns = total / M_PI;
  double rounded = std::round(half_turns);
  if (std::abs(half_turns - rounded) > 0.25)
    throw geometry_error("phase lift residual too large");
  return static_cast<int>(rounded);
}

int t_bar(const FlattenedDiagram& d, const FigureEightSystem& sys,
          const std::vector<int>& base_ids) {
  int k = sys.active;
  if (static_cast<int>(base_ids.size()) != k)
    throw identity_error("base tuple has wrong arity");
  if (k <= 1) return 0;

  // strand i: along alpha_{i+1} from the tuple point to the even puncture,
  // then back along beta_{i+1} from its end to the tuple point on it.
  struct Strand {
    Pt start;           // tuple point on alpha i+1
    Pt even;            // (2(i+1), 0)
    const PLCurve* beta;
    Rat beta_from;      // = segment count (the even endpoint)
    Rat beta_to;        // param of the tuple point lying on beta i+1
    int end_slot;       // which tuple slot the strand lands on
  };
  std::vector<Strand> strands(k);
  for (int i = 0; i < k; ++i) {
    const IntersectionPoint& b = sys.base[base_ids[i]];
    if (b.alpha_index != i + 1) throw identity_error("tuple slot off its alpha");
    strands[i].start = b.position;
    strands[i].even = Pt(Rat(2 * (i + 1)), Rat(0));
    strands[i].beta = &d.betas[i];
    strands[i].beta_from = Rat(d.betas[i].segment_count());
    strands[i].end_slot = -1;
    for (int s = 0; s < k; ++s)
      if (sys.base[base_ids[s]].beta_index == i + 1) {
        strands[i].beta_to = sys.base[base_ids[s]].beta_param;
        strands[i].end_slot = s;
      }
    if (strands[i].end_slot < 0) throw identity_error("tuple misses a beta");
  }

  // time breakpoints: phase 1 on [0,1], phase 2 on [1,2]; each strand adds
  // the times of its beta vertices
  std::vector<Rat> times = {Rat(0), Rat(1), Rat(2)};
  for (int i = 0; i < k; ++i) {
    Rat from = strands[i].beta_from, to = strands[i].beta_to;
    if (from == to) continue;
    long lo = rat_floor(to < from ? to : from);
    long hi = rat_floor(to < from ? from : to) + 1;
    for (long v = lo; v <= hi; ++v) {
      Rat param(v);
      // time with param = from + (to-from)*(t-1)
      Rat t = (param - from) / (to - from) + 1;
      if (t > 1 && t < 2) times.push_back(t);
    }
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  auto strand_at = [&](int i, const Rat& t) -> Pt {
    const Strand& s = strands[i];
    if (t <= 1) return lerp(s.start, s.even, t);
    if (s.beta_from == s.beta_to) return s.even;
    Rat param = s.beta_from + (s.beta_to - s.beta_from) * (t - 1);
    return beta_point_at(*s.beta, param);
  };

  // pair permutation orbits: {i,j} -> {end_slot(i), end_slot(j)}
  int total = 0;
  std::vector<std::vector<bool>> done(k, std::vector<bool>(k, false));
  for (int i0 = 0; i0 < k; ++i0)
    for (int j0 = i0 + 1; j0 < k; ++j0) {
      if (done[i0][j0]) continue;
      PLCurve diff;
      diff.closed = true;
      int a = i0, b = j0;
      do {
        done[std::min(a, b)][std::max(a, b)] = true;
        for (size_t ti = 0; ti + 1 < times.size(); ++ti)
          diff.v.push_back(strand_at(a, times[ti]) - strand_at(b, times[ti]));
        diff.v.push_back(strand_at(a, Rat(2)) - strand_at(b, Rat(2)));
        int na = strands[a].end_slot, nb = strands[b].end_slot;
        a = na;
        b = nb;
      } while (!(a == i0 && b == j0) && !(a == j0 && b == i0));
      if (a == j0 && b == i0) {
        // odd orbit closure: continue once more through the swapped pair
        do {
          done[std::min(a, b)][std::max(a, b)] = true;
          for (size_t ti = 0; ti + 1 < times.size(); ++ti)
            diff.v.push_back(strand_at(a, times[ti]) - strand_at(b, times[ti]));
          diff.v.push_back(strand_at(a, Rat(2)) - strand_at(b, Rat(2)));
          int na = strands[a].end_slot, nb = strands[b].end_slot;
          a = na;
          b = nb;
        } while (!(a == i0 && b == j0));
      }
      simplify_curve(diff);
      // drop exact duplicates at segment joins
      if (diff.v.size() >= 2) total += winding_number(diff, Pt(Rat(0), Rat(0)));
    }
  return kTSign * total;
}

namespace {

GradingRecord grade_one(const FlattenedDiagram& d, const FigureEightSystem& sys,
                        const Generator& g, int shift,
                        const std::vector<int>& qstar_cache,
                        const std::vector<int>& pstar_cache,
                        const std::map<std::vector<int>, int>& t_cache) {
  GradingRecord r;
  for (int pid : g.point_ids) {
    r.q += qstar_cache[pid];
    r.p_tilde += pstar_cache[pid];
  }
  r.t = t_cache.at(project_to_base(sys, g));
  r.j = 2 * (r.t - r.q) + shift;
  r.p = r.p_tilde - shift;
  r.two_r = 2 * r.p + r.j;
  if (r.two_r != 2 * (r.p_tilde + r.t - r.q) - shift)
    throw identity_error("R grading identities disagree");
  r.sign = (r.p_tilde % 2 == 0) ? 1 : -1;
  return r;
}

void build_caches(const FlattenedDiagram& d, const FigureEightSystem& sys,
                  const std::vector<Generator>& gens, std::vector<int>& qstar_cache,
                  std::vector<int>& pstar_cache,
                  std::map<std::vector<int>, int>& t_cache, bool parallel) {
  int np = static_cast<int>(sys.points.size());
  qstar_cache.assign(np, 0);
  pstar_cache.assign(np, 0);
  std::vector<std::vector<int>> tuples;
  for (const auto& g : gens) {
    auto key = project_to_base(sys, g);
    if (!t_cache.count(key)) {
      t_cache[key] = 0;
      tuples.push_back(key);
    }
  }
  std::vector<int> tvals(tuples.size(), 0);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < np; ++i) {
    qstar_cache[i] = q_star(d, sys, i);
    pstar_cache[i] = p_star(sys, i);
  }
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < static_cast<int>(tuples.size()); ++i)
    tvals[i] = t_bar(d, sys, tuples[i]);
  for (size_t i = 0; i < tuples.size(); ++i) t_cache[tuples[i]] = tvals[i];
}

std::vector<GradingRecord> grade_impl(const FlattenedDiagram& d,
                                      const FigureEightSystem& sys,
                                      const std::vector<Generator>& gens, int shift,
                                      bool parallel) {
  std::vector<int> qstar_cache, pstar_cache;
  std::map<std::vector<int>, int> t_cache;
  build_caches(d, sys, gens, qstar_cache, pstar_cache, t_cache, parallel);
  std::vector<GradingRecord> out(gens.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < static_cast<int>(gens.size()); ++i)
    out[i] = grade_one(d, sys, gens[i], shift, qstar_cache, pstar_cache, t_cache);
  return out;
}

}  // namespace

std::vector<GradingRecord> grade_all_serial(const FlattenedDiagram& d,
                                            const FigureEightSystem& sys,
                                            const std::vector<Generator>& gens,
                                            int shift) {
  return grade_impl(d, sys, gens, shift, false);
}

std::vector<GradingRecord> grade_all(const FlattenedDiagram& d,
                                     const FigureEightSystem& sys,
                                     const std::vector<Generator>& gens, int shift) {
  return grade_impl(d, sys, gens, shift, true);
}

int orientation_sign(const FigureEightSystem& sys, const Generator& g) {
  int s = (sys.active % 2 == 0) ? 1 : -1;
  for (int pid : g.point_ids) {
    const DoubledPoint& dp = sys.points[pid];
    const FigureEight& fe = sys.eights[dp.beta_index - 1];
    long seg = rat_floor(dp.e_param);
    Pt a = fe.curve.seg_a(static_cast<int>(seg));
    Pt b = fe.curve.seg_b(static_cast<int>(seg));
    if (a.x != b.x || a.y == b.y)
      throw geometry_error("figure-eight crossing not vertical");
    s *= (b.y > a.y) ? 1 : -1;
  }
  return s;
}

}  // namespace jones
