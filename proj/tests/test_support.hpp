#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "normtower/gset.hpp"

namespace normtower::testing_support {

inline std::size_t pick(std::mt19937_64& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

/// Same G-set with its points renamed by a random permutation.
inline GSet shuffled(const GSet& x, std::mt19937_64& rng) {
  const std::size_t n = x.size();
  std::vector<Point> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<Point>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(sigma[i - 1], sigma[pick(rng, i)]);
  std::vector<Point> table(x.group().order() * n);
  for (ElemId e = 0; e < x.group().order(); ++e) {
    for (std::size_t p = 0; p < n; ++p) table[e * n + sigma[p]] = sigma[x.act(e, static_cast<Point>(p))];
  }
  return GSet::from_table(x.group(), n, std::move(table));
}

/// A disjoint union of 0..max_orbits coset spaces G/K for random subgroups K
/// (not just class representatives), with shuffled points.
inline GSet random_gset(const PermGroup& g, std::mt19937_64& rng, std::size_t max_orbits) {
  auto subs = g.lattice().subgroups();
  std::vector<GSet> parts;
  const std::size_t count = pick(rng, max_orbits + 1);
  for (std::size_t i = 0; i < count; ++i) parts.push_back(GSet::cosets(subs[pick(rng, subs.size())]));
  return shuffled(disjoint_union(parts, g), rng);
}

}  // namespace normtower::testing_support
