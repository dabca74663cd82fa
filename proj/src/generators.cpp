#include "jones/generators.hpp"

#include <algorithm>

#include "jones/errors.hpp"

namespace jones {

int Generator::permutation_parity() const {
  std::vector<int> p = betas;
  int parity = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) parity = -parity;
  return parity;
}

std::vector<Generator> enumerate_generators(const FigureEightSystem& sys) {
  int k = sys.active;
  // candidates per alpha, canonical order
  std::vector<std::vector<const DoubledPoint*>> cand(k);
  for (const auto& dp : sys.points) cand[dp.alpha_index - 1].push_back(&dp);
  for (auto& list : cand)
    std::sort(list.begin(), list.end(),
              [](const DoubledPoint* a, const DoubledPoint* b) {
                if (a->beta_index != b->beta_index) return a->beta_index < b->beta_index;
                if (a->primed != b->primed) return !a->primed;
                return a->position.x < b->position.x;
              });

  std::vector<Generator> out;
  Generator cur;
  cur.point_ids.resize(k);
  cur.betas.resize(k);
  std::vector<bool> beta_used(k + 1, false);
  auto rec = [&](auto&& self, int alpha) -> void {
    if (alpha == k) {
      Generator g = cur;
      g.label.clear();
      for (int i = 0; i < k; ++i) {
        if (i) g.label += ' ';
        g.label += sys.points[g.point_ids[i]].label;
      }
      out.push_back(std::move(g));
      return;
    }
    for (const DoubledPoint* dp : cand[alpha]) {
      if (beta_used[dp->beta_index]) continue;
      beta_used[dp->beta_index] = true;
      cur.point_ids[alpha] = dp->id;
      cur.betas[alpha] = dp->beta_index;
      self(self, alpha + 1);
      beta_used[dp->beta_index] = false;
    }
  };
  rec(rec, 0);
  return out;
}

Generator distinguished_generator(const FigureEightSystem& sys) {
  Generator g;
  int k = sys.active;
  g.point_ids.resize(k);
  g.betas.resize(k);
  for (int j = 0; j < k; ++j) {
    const DoubledPoint& dp = sys.points[sys.nu[j]];
    if (dp.alpha_index != j + 1)
      throw geometry_error("nu point off its own alpha");
    g.point_ids[j] = dp.id;
    g.betas[j] = dp.beta_index;
  }
  for (int i = 0; i < k; ++i) {
    if (i) g.label += ' ';
    g.label += sys.points[g.point_ids[i]].label;
  }
  return g;
}

std::vector<int> project_to_base(const FigureEightSystem& sys, const Generator& g) {
  std::vector<int> out;
  for (int pid : g.point_ids) out.push_back(sys.points[pid].base_id);
  return out;
}

}  // namespace jones
