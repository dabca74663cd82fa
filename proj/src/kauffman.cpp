#include "jones/kauffman.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "jones/errors.hpp"

namespace jones {

namespace {

// Union-find over the strand segments of one resolved diagram.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Bracket exponent (in A units) and loop count for one state. Segment (l, p)
// = strand at position p between letter levels l and l+1.
void resolve_state(const BraidWord& b, uint32_t mask, int* a_exp, int* loops) {
  int m = b.strands;
  int c = static_cast<int>(b.letters.size());
  auto seg = [m](int level, int pos) { return level * m + pos; };
  UnionFind uf((c + 1) * m);
  int exp = 0;
  for (int l = 0; l < c; ++l) {
    int i = b.letters[l].index - 1;  // crossing joins positions i, i+1
    bool cup = (mask >> l) & 1;
    // A-smoothing of a positive crossing is the identity tangle; the cup-cap
    // smoothing carries A^{-1}. Negative crossings swap the weights.
    exp += (b.letters[l].sign > 0) ? (cup ? -1 : 1) : (cup ? 1 : -1);
    for (int p = 0; p < m; ++p) {
      if (p == i || p == i + 1) continue;
      uf.unite(seg(l, p), seg(l + 1, p));
    }
    if (cup) {
      uf.unite(seg(l, i), seg(l, i + 1));
      uf.unite(seg(l + 1, i), seg(l + 1, i + 1));
    } else {
      uf.unite(seg(l, i), seg(l + 1, i));
      uf.unite(seg(l, i + 1), seg(l + 1, i + 1));
    }
  }
  for (int p = 0; p < m; ++p) uf.unite(seg(c, p), seg(0, p));  // trace closure
  int n_loops = 0;
  for (int s = 0; s < (c + 1) * m; ++s)
    if (uf.find(s) == s) ++n_loops;
  // unused segment slots on crossing levels were all united with neighbors,
  // so every root is a genuine loop
  *a_exp = exp;
  *loops = n_loops;
}

Laurent bracket_range(const BraidWord& b, uint32_t lo, uint32_t hi) {
  // d = -A^2 - A^{-2}
  Laurent d;
  d.add_term(-1, 2);
  d.add_term(-1, -2);
  std::vector<Laurent> d_pow = {Laurent(1)};
  Laurent acc;
  for (uint32_t mask = lo; mask < hi; ++mask) {
    int a_exp = 0, loops = 0;
    resolve_state(b, mask, &a_exp, &loops);
    while (static_cast<int>(d_pow.size()) < loops) d_pow.push_back(d_pow.back() * d);
    acc += Laurent::monomial(1, a_exp) * d_pow[loops - 1];
  }
  return acc;
}

Laurent finish(const BraidWord& b, Laurent bracket) {
  // V = (-A)^{-3w} * <L>, then A = t^{-1/4}
  int w = writhe(b);
  Laurent v = bracket * Laurent::monomial((3 * w) % 2 == 0 ? 1 : -1, -3 * w);
  // A-units to t^{1/2} units: exponent e of A becomes t^{-e/4}; all exponents
  // are even multiples of 2 here, so -e/2 lands on half-integer t units
  Laurent out;
  for (const auto& [e, c] : v.coeffs()) {
    if (e % 2 != 0) throw identity_error("odd A-exponent in the bracket");
    out.add_term(c, -e / 2);
  }
  return out;
}

}  // namespace

Laurent kauffman_jones_serial(const BraidWord& b) {
  if (b.letters.size() > 24) throw input_error("state sum capped at 24 letters");
  uint32_t states = 1u << b.letters.size();
  return finish(b, bracket_range(b, 0, states));
}

Laurent kauffman_jones(const BraidWord& b) {
  if (b.letters.size() > 24) throw input_error("state sum capped at 24 letters");
  uint32_t states = 1u << b.letters.size();
#ifdef _OPENMP
  int threads = omp_get_max_threads();
#else
  int threads = 1;
#endif
  if (states < 1024 || threads == 1) return finish(b, bracket_range(b, 0, states));
  std::vector<Laurent> partial(threads);
#pragma omp parallel num_threads(threads)
  {
#ifdef _OPENMP
    int tid = omp_get_thread_num();
#else
    int tid = 0;
#endif
    uint32_t chunk = states / threads + 1;
    uint32_t lo = tid * chunk;
    uint32_t hi = std::min(states, lo + chunk);
    if (lo < hi) partial[tid] = bracket_range(b, lo, hi);
  }
  Laurent total;
  for (const auto& p : partial) total += p;
  return finish(b, total);
}

}  // namespace jones
