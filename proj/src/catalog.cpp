#include <algorithm>
#include <cctype>

#include "normtower/group.hpp"

namespace normtower {

namespace {

struct Factor {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> gens;  // one-line images, 0-based
};

std::vector<std::size_t> rotation(std::size_t n) {
  std::vector<std::size_t> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return img;
}

Factor catalog_factor(std::string_view name, std::string_view whole) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::MalformedSpec, "catalog name '" + std::string(whole) + "': " + why);
  };
  if (name.size() < 2) throw bad("unknown factor '" + std::string(name) + "'");
  const char family = name.front();
  std::size_t n = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw bad("expected a number after " + std::string(1, family));
    n = n * 10 + static_cast<std::size_t>(c - '0');
    if (n > 4096) throw bad("index too large");
  }
  Factor f;
  switch (family) {
    case 'C':
      if (n < 1) throw bad("cyclic groups need n >= 1");
      f.degree = n;
      if (n > 1) f.gens.push_back(rotation(n));
      break;
    case 'D': {
      if (n < 3) throw bad("dihedral groups need n >= 3 (order 2n)");
      f.degree = n;
      f.gens.push_back(rotation(n));
      std::vector<std::size_t> flip(n);
      for (std::size_t i = 0; i < n; ++i) flip[i] = n - 1 - i;
      f.gens.push_back(flip);
      break;
    }
    case 'S':
      if (n < 1 || n > 7) throw bad("symmetric groups are catalogued for 1 <= n <= 7");
      f.degree = n;
      if (n > 1) {
        std::vector<std::size_t> swap(n);
        for (std::size_t i = 0; i < n; ++i) swap[i] = i;
        std::swap(swap[0], swap[1]);
        f.gens.push_back(swap);
        if (n > 2) f.gens.push_back(rotation(n));
      }
      break;
    default:
      throw bad("unknown family '" + std::string(1, family) + "'");
  }
  return f;
}

}  // namespace

PermGroup build_catalog_group(std::string_view name, const Limits& limits) {
  std::vector<Factor> factors;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      factors.push_back(catalog_factor(name.substr(start, i - start), name));
      start = i + 1;
    }
  }
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree;

  // Factors act on consecutive blocks of points.
  std::vector<Perm> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens) {
      std::vector<Perm::Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<Perm::Point>(i);
      for (std::size_t i = 0; i < f.degree; ++i) {
        img[offset + i] = static_cast<Perm::Point>(offset + g[i]);
      }
      gens.emplace_back(std::move(img));
    }
    offset += f.degree;
  }
  return PermGroup::generate(std::string(name), degree, std::move(gens), limits);
}

PermGroup build_group(const GroupSpec& spec, const Limits& limits) {
  if (!spec.catalog.empty()) return build_catalog_group(spec.catalog, limits);
  if (spec.generators.empty()) {
    throw Error(ErrorKind::MalformedSpec, "group spec needs a catalog name or generators");
  }
  const std::size_t inferred = max_point(spec.generators);
  const std::size_t degree = spec.degree ? spec.degree : std::max<std::size_t>(inferred, 1);
  auto gens = parse_generators(spec.generators, degree);
  std::string id = "perm" + std::to_string(degree) + ":" + format_generators(gens);
  return PermGroup::generate(std::move(id), degree, std::move(gens), limits);
}

Subgroup parse_subgroup(const PermGroup& g, std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "e" || text == "1" || text == "()") return Subgroup::trivial(g);
  if (text == "G") return Subgroup::whole(g);
  return Subgroup::generated_by(g, parse_generators(text, g.degree()));
}

}  // namespace normtower
