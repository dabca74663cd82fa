#include "jones/jones_poly.hpp"

#include "jones/errors.hpp"

namespace jones {

Laurent bigelow_polynomial(const std::vector<GradingRecord>& records) {
  Laurent p;
  for (const auto& r : records) p.add_term(r.sign, r.j);
  return p;
}

Laurent normalize_jones(const Laurent& j_q) {
  Laurent divisor;
  divisor.add_term(1, 1);
  divisor.add_term(1, -1);
  Laurent v_q = j_q.divide_exact(divisor);
  return q_to_t_half(v_q);
}

Laurent corollary_polynomial(const std::vector<GradingRecord>& records) {
  // sum in t^{1/2} units: exponent of t^{R-P} is two_r - 2p
  Laurent sum;
  for (const auto& r : records) sum.add_term(r.p % 2 == 0 ? 1 : -1, r.two_r - 2 * r.p);
  Laurent divisor;  // -(t^{1/2} + t^{-1/2})
  divisor.add_term(-1, 1);
  divisor.add_term(-1, -1);
  return sum.divide_exact(divisor);
}

ReducedResult reduced_polynomial(const FlattenedDiagram& d, int writhe_of_braid) {
  ReducedResult out;
  int m = d.m;
  // clear-path test: from mu_2m along the axis to (2m + 1/2, 0), then
  // straight up to the boundary
  Pt stub_a(Rat(2 * m), Rat(0));
  Pt stub_b(Rat(4 * m + 1, 2), Rat(0));
  Pt ray_top(stub_b.x, d.boundary_radius);
  for (const PLCurve& c : d.betas) {
    int n = c.segment_count();
    for (int s = 0; s < n; ++s) {
      bool overlap = false;
      auto h1 = segment_intersection(stub_a, stub_b, c.seg_a(s), c.seg_b(s), &overlap);
      if (overlap) return out;
      if (h1 && !(h1->s == 0))  // contact at mu_2m itself is the beta endpoint
        return out;
      auto h2 = segment_intersection(stub_b, ray_top, c.seg_a(s), c.seg_b(s), &overlap);
      if (h2 || overlap) return out;
    }
  }
  // alphas all lie left of mu_2m except their endpoint at mu_2m itself
  out.condition_holds = true;

  FigureEightSystem sys = build_figure_eights(d, m - 1);
  auto gens = enumerate_generators(sys);
  int shift = sys.active + writhe_of_braid;
  auto recs = grade_all(d, sys, gens, shift);
  out.v_t = q_to_t_half(bigelow_polynomial(recs));
  return out;
}

}  // namespace jones
