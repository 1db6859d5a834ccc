#include "normtower/orbit_poset.hpp"

#include <algorithm>

namespace normtower {

OrbitPoset::OrbitPoset(const PermGroup& g, const Limits& limits) : lattice_(g.lattice(limits)) {}

OrbitPoset build_orbit_poset(const PermGroup& g, const Limits& limits) { return OrbitPoset(g, limits); }

ClassSet OrbitPoset::all() const {
  ClassSet out;
  for (std::size_t c = 0; c < size(); ++c) out.insert(c);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> OrbitPoset::hasse_edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (!greater(a, b)) continue;
      bool covers = true;
      for (std::size_t c = 0; c < size() && covers; ++c) {
        if (greater(a, c) && greater(c, b)) covers = false;
      }
      if (covers) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::string OrbitPoset::label(std::size_t c) const { return "G/" + lattice_.class_label(c); }

std::vector<std::size_t> DegreeMap::image() const {
  std::vector<std::size_t> out(values.begin(), values.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DegreeMap degree_map(const PermGroup& g, const Subgroup& h, const Limits& limits) {
  if (!h.parent().same_as(g)) {
    throw Error(ErrorKind::SubgroupMismatch, "H is not a subgroup of " + g.id());
  }
  auto lat = g.lattice(limits);
  DegreeMap q{g, h, {}};
  for (const auto& cls : lat.classes()) q.values.push_back(double_cosets(g, cls.representative, h).size());
  return q;
}

bool is_family(const OrbitPoset& poset, const ClassSet& classes) {
  for (std::size_t c : classes) {
    for (std::size_t d = 0; d < poset.size(); ++d) {
      if (poset.geq(d, c) && !classes.count(d)) return false;
    }
  }
  return true;
}

Family family_Fn(const OrbitPoset& poset, const DegreeMap& q, std::size_t n) {
  Family f{poset.group(), {}};
  for (std::size_t c = 0; c < poset.size(); ++c) {
    if (q(c) > n) f.classes.insert(c);
  }
  return f;
}

std::string to_string(const Degree& d) {
  if (std::holds_alternative<Infinite>(d)) return "inf";
  return std::to_string(std::get<std::size_t>(d));
}

Degree delta(const Family& f, const DegreeMap& q) {
  if (f.empty()) return Infinite{};
  std::size_t best = q(*f.classes.begin());
  for (std::size_t c : f.classes) best = std::min(best, q(c));
  return best;
}

bool is_interval(const OrbitPoset& poset, const ClassSet& members) {
  for (std::size_t x : members) {
    for (std::size_t y : members) {
      if (!poset.geq(x, y)) continue;
      for (std::size_t z = 0; z < poset.size(); ++z) {
        if (poset.geq(x, z) && poset.geq(z, y) && !members.count(z)) return false;
      }
    }
  }
  return true;
}

PosetInterval family_to_interval(const Family& f) { return PosetInterval{f.classes}; }

Family interval_to_family(const OrbitPoset& poset, const PosetInterval& i) {
  if (!is_interval(poset, i.members)) throw Error(ErrorKind::NotAnInterval, "class set is not an interval");
  if (!i.empty() && !i.contains(poset.maximum())) {
    throw Error(ErrorKind::NotCoveringMaximum, "a nonempty interval must contain G/e to define a family");
  }
  return Family{poset.group(), i.members};
}

IntervalDecomposition decompose_interval(const OrbitPoset& poset, const PosetInterval& i) {
  if (!is_interval(poset, i.members)) throw Error(ErrorKind::NotAnInterval, "class set is not an interval");
  IntervalDecomposition out;
  if (i.empty()) {
    out.empty_marker = true;
    return out;
  }
  for (std::size_t z = 0; z < poset.size(); ++z) {
    bool above = std::any_of(i.members.begin(), i.members.end(), [&](std::size_t x) { return poset.geq(z, x); });
    if (!above) continue;
    out.upper.members.insert(z);
    if (!i.contains(z)) out.lower.members.insert(z);
  }
  return out;
}

PosetInterval preimage_interval(const OrbitPoset& poset, const DegreeMap& q, std::size_t lo, std::size_t hi) {
  PosetInterval out;
  for (std::size_t c = 0; c < poset.size(); ++c) {
    if (lo <= q(c) && q(c) <= hi) out.members.insert(c);
  }
  if (!is_interval(poset, out.members)) {
    throw Error(ErrorKind::IntervalViolation,
                "q^-1([" + std::to_string(lo) + "," + std::to_string(hi) + "]) is not an interval");
  }
  return out;
}

}  // namespace normtower
