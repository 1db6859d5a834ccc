#include "normtower/tower.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace normtower {

namespace {

bool is_all(const Family& f) { return f.classes.size() == f.group.lattice().class_count(); }

bool is_free_family(const Family& f) {
  return f.classes.size() == 1 && *f.classes.begin() == f.group.lattice().trivial_class();
}

Family all_classes(const PermGroup& g, const Limits& limits) {
  Family f{g, {}};
  const auto lat = g.lattice(limits);
  for (std::size_t c = 0; c < lat.class_count(); ++c) f.classes.insert(c);
  return f;
}

// "C5" -> "C_{5}", "S3" -> "\Sigma_{3}", products joined by \times.
std::string latex_token(const std::string& token) {
  if (token.size() >= 2 && std::isupper(static_cast<unsigned char>(token[0])) &&
      std::all_of(token.begin() + 1, token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    const std::string head = token[0] == 'S' ? "\\Sigma" : std::string(1, token[0]);
    return head + "_{" + token.substr(1) + "}";
  }
  if (token == "e") return "e";
  std::string escaped;
  for (char c : token) {
    if (c == '_' || c == '{' || c == '}' || c == '#' || c == '%' || c == '&' || c == '$') escaped += '\\';
    escaped += c;
  }
  return "\\mathrm{" + escaped + "}";
}

std::string latex_name(const std::string& name) {
  if (auto colon = name.find(':'); colon != std::string::npos && name.rfind("perm", 0) != 0) {
    return latex_token(name.substr(0, colon)) + "{:}" + latex_name(name.substr(colon + 1));
  }
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i == name.size() || name[i] == 'x') {
      parts.push_back(name.substr(start, i - start));
      start = i + 1;
    }
  }
  const bool product = parts.size() > 1 && std::all_of(parts.begin(), parts.end(), [](const std::string& p) {
                         return latex_token(p).rfind("\\mathrm", 0) != 0;
                       });
  if (!product) return latex_token(name);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " \\times ";
    out += latex_token(parts[i]);
  }
  return out;
}

std::string space_name(const Family& f) { return is_free_family(f) ? f.group.id() : family_name(f); }

std::string space_name_latex(const Family& f) {
  return is_free_family(f) ? latex_name(f.group.id()) : family_name_latex(f);
}

std::size_t checked_power(std::size_t p, std::size_t k, std::size_t cap) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (out > cap / p) {
      throw Error(ErrorKind::OrderCapExceeded,
                  std::to_string(p) + "^" + std::to_string(k) + " exceeds the order cap " + std::to_string(cap));
    }
    out *= p;
  }
  return out;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

std::string family_name(const Family& f) {
  const auto lat = f.group.lattice();
  std::string out = "{";
  bool first = true;
  for (std::size_t c : f.classes) {
    if (!first) out += ",";
    out += lat.class_label(c);
    first = false;
  }
  return out + "}";
}

std::string family_name_latex(const Family& f) {
  const auto lat = f.group.lattice();
  std::string out = "\\mathcal{F}\\{";
  bool first = true;
  for (std::size_t c : f.classes) {
    if (!first) out += ", ";
    out += latex_name(lat.class_label(c));
    first = false;
  }
  return out + "\\}";
}

LocalizationDescriptor LocalizationDescriptor::identity(const PermGroup& g, const Limits& limits) {
  return LocalizationDescriptor{all_classes(g, limits), Family{g, {}}, false};
}

LocalizationDescriptor LocalizationDescriptor::zero_functor(const PermGroup& g) {
  return LocalizationDescriptor{Family{g, {}}, Family{g, {}}, true};
}

bool LocalizationDescriptor::is_identity() const {
  return !zero && is_all(family_Iprime) && family_Idoubleprime.empty();
}

std::string LocalizationDescriptor::render(const std::string& argument) const {
  if (zero) return "0";
  std::string inner = family_Idoubleprime.empty()
                          ? argument
                          : "~E" + space_name(family_Idoubleprime) + " ^ " + argument;
  if (is_all(family_Iprime)) return inner;
  return "F((E" + space_name(family_Iprime) + ")_+, " + inner + ")";
}

std::string LocalizationDescriptor::render_latex(const std::string& argument) const {
  if (zero) return "0";
  std::string inner = family_Idoubleprime.empty()
                          ? argument
                          : "\\widetilde{E}" + space_name_latex(family_Idoubleprime) + " \\wedge " + argument;
  if (is_all(family_Iprime)) return inner;
  return "F((E" + space_name_latex(family_Iprime) + ")_{+}, " + inner + ")";
}

bool LocalizationDescriptor::operator==(const LocalizationDescriptor& other) const {
  if (zero || other.zero) return zero == other.zero;
  return family_Iprime == other.family_Iprime && family_Idoubleprime == other.family_Idoubleprime;
}

LocalizationDescriptor localization_descriptor(const OrbitPoset& poset, const PosetInterval& interval) {
  const auto d = decompose_interval(poset, interval);
  if (d.empty_marker) return LocalizationDescriptor::zero_functor(poset.group());
  return LocalizationDescriptor{Family{poset.group(), d.upper.members}, Family{poset.group(), d.lower.members},
                                false};
}

std::string render_composite(const std::vector<LocalizationDescriptor>& outer_to_inner, const std::string& argument) {
  std::string out = argument;
  for (auto it = outer_to_inner.rbegin(); it != outer_to_inner.rend(); ++it) {
    if (it->zero) return "0";
    out = it->render(out);
  }
  return out;
}

std::string render_composite_latex(const std::vector<LocalizationDescriptor>& outer_to_inner,
                                   const std::string& argument) {
  std::string out = argument;
  for (auto it = outer_to_inner.rbegin(); it != outer_to_inner.rend(); ++it) {
    if (it->zero) return "0";
    out = it->render_latex(out);
  }
  return out;
}

TowerReport tower_report(const PermGroup& g, const Subgroup& h, const Limits& limits) {
  OrbitPoset poset(g, limits);
  TowerReport report{g, h, 0, {}, degree_map(g, h, limits), {}};
  report.top_degree = report.q.index();
  report.jump_set = report.q.image();
  const Family everything = all_classes(g, limits);
  for (std::size_t n = 0; n <= report.top_degree; ++n) {
    Family family = family_Fn(poset, report.q, n);
    auto truncation = family == everything ? LocalizationDescriptor::zero_functor(g)
                                           : LocalizationDescriptor{everything, family, false};
    TowerLevel level{n, std::move(family), std::move(truncation), {}, {}};
    const auto from_interval = localization_descriptor(poset, preimage_interval(poset, report.q, 0, n));
    if (!(from_interval == level.truncation)) {
      throw Error(ErrorKind::InvariantViolation,
                  "P_" + std::to_string(n) + " disagrees with the localization of q^-1([0," + std::to_string(n) + "])");
    }
    level.p_lower = level.truncation.render();
    if (level.family.empty()) {
      level.p_upper = "N";
    } else if (level.family == everything) {
      level.p_upper = "0";
    } else {
      level.p_upper = "F(~E" + space_name(level.family) + ", N)";
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

std::vector<std::size_t> descriptor_changes(const TowerReport& report) {
  std::vector<std::size_t> out;
  for (std::size_t n = 1; n < report.levels.size(); ++n) {
    if (report.levels[n].p_lower != report.levels[n - 1].p_lower) out.push_back(n);
  }
  return out;
}

FracturePlan fracture_plan(const PermGroup& g, const Subgroup& h, std::size_t k, std::size_t m, std::size_t n,
                           const Limits& limits) {
  OrbitPoset poset(g, limits);
  const DegreeMap q = degree_map(g, h, limits);
  if (!(k < m && m <= n && n <= q.index())) {
    throw Error(ErrorKind::BadIndices, "need 0 <= k < m <= n <= [G:H] = " + std::to_string(q.index()) + ", got (" +
                                           std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) +
                                           ")");
  }
  FracturePlan plan{g,
                    h,
                    k,
                    m,
                    n,
                    preimage_interval(poset, q, k, n),
                    preimage_interval(poset, q, m, n),
                    preimage_interval(poset, q, k, m - 1),
                    k == 0 ? all_classes(g, limits) : family_Fn(poset, q, k - 1),
                    family_Fn(poset, q, n),
                    false,
                    {},
                    false,
                    {}};
  ClassSet joined = plan.interval_1.members;
  joined.insert(plan.interval_2.members.begin(), plan.interval_2.members.end());
  if (joined != plan.interval.members ||
      joined.size() != plan.interval_1.members.size() + plan.interval_2.members.size()) {
    throw Error(ErrorKind::InvariantViolation, "q^-1([k,n]) is not the disjoint union of its two halves");
  }

  ClassSet difference;
  std::set_difference(plan.goodwillie_upper.classes.begin(), plan.goodwillie_upper.classes.end(),
                      plan.goodwillie_lower.classes.begin(), plan.goodwillie_lower.classes.end(),
                      std::inserter(difference, difference.end()));
  plan.goodwillie_families_valid = difference == plan.interval.members &&
                                   is_family(poset, plan.goodwillie_upper.classes) &&
                                   is_family(poset, plan.goodwillie_lower.classes);

  auto truncation = [](std::size_t lo, std::size_t hi) {
    std::string p = "P_" + std::to_string(hi);
    return lo == 0 ? p : "L_" + std::to_string(lo - 1) + " " + p;
  };
  const auto d = localization_descriptor(poset, plan.interval);
  const auto d1 = localization_descriptor(poset, plan.interval_1);
  const auto d2 = localization_descriptor(poset, plan.interval_2);
  auto corner = [&](std::string position, std::string goodwillie, std::vector<LocalizationDescriptor> factors) {
    FractureCorner c{std::move(position), std::move(goodwillie) + " N", render_composite(factors),
                     render_composite_latex(factors), std::move(factors)};
    plan.corners.push_back(std::move(c));
  };
  corner("I", truncation(k, n), {d});
  corner("I1", truncation(m, n), {d1});
  corner("I2", truncation(k, m - 1), {d2});
  corner("I2I1", truncation(k, m - 1) + " " + truncation(m, n), {d2, d1});

  for (std::size_t x1 : plan.interval_1.members) {
    for (std::size_t x2 : plan.interval_2.members) {
      if (!poset.greater(x1, x2)) plan.violations.push_back(HypothesisViolation{x1, x2});
    }
  }
  plan.hypothesis_pass = plan.violations.empty();
  return plan;
}

std::string tikzcd_square(const std::vector<std::string>& corners) {
  if (corners.size() != 4) throw Error(ErrorKind::InvariantViolation, "a square has four corners");
  return "\\begin{tikzcd}\n" + corners[0] + " \\arrow{r} \\arrow{d} & " + corners[1] + " \\arrow{d} \\\\\n" +
         corners[2] + " \\arrow{r} & " + corners[3] + "\n\\end{tikzcd}\n";
}

CpkReport cpk_tower(std::size_t p, std::size_t k, const Limits& limits) {
  if (!is_prime(p)) throw Error(ErrorKind::MalformedSpec, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::MalformedSpec, "k must be at least 1");
  const std::size_t order = checked_power(p, k, limits.group_order_cap);
  PermGroup g = build_catalog_group("C" + std::to_string(order), limits);
  CpkReport out{p, k, tower_report(g, Subgroup::trivial(g), limits), {}, false};
  const auto& levels = out.tower.levels;
  const auto lat = g.lattice(limits);

  std::size_t lo = 1;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t hi = lo * p - 1;
    bool constant = true;
    for (std::size_t n = lo; n <= hi; ++n) constant = constant && levels[n].family == levels[lo].family;
    out.checks.push_back(ExampleCheck{"F_n constant on [" + std::to_string(lo) + "," + std::to_string(hi) + "]",
                                      constant, family_name(levels[lo].family)});
    lo *= p;
  }

  std::size_t pm = 1;
  for (std::size_t m = 0; m <= k; ++m) {
    const std::size_t bound = order / pm;  // p^{k-m}
    Family expected{g, {}};
    for (std::size_t c = 0; c < lat.class_count(); ++c) {
      if (lat.class_info(c).order() < bound) expected.classes.insert(c);
    }
    out.checks.push_back(ExampleCheck{"F_" + std::to_string(pm) + " = {K : |K| < " + std::to_string(bound) + "}",
                                      levels[pm].family == expected, family_name(levels[pm].family)});
    pm *= p;
  }

  const std::string smash = "~E" + g.id() + " ^ N";
  const std::size_t below = order / p;
  out.checks.push_back(ExampleCheck{"P_" + std::to_string(order - 1) + " = P_" + std::to_string(below) + " = " + smash,
                                    levels[order - 1].p_lower == smash && levels[below].p_lower == smash,
                                    levels[order - 1].p_lower});
  out.pass = std::all_of(out.checks.begin(), out.checks.end(), [](const ExampleCheck& c) { return c.pass; });
  return out;
}

PermGroup symmetric_group(std::size_t n, const Limits& limits) {
  return build_catalog_group("S" + std::to_string(n), limits);
}

namespace {

void check_gamma_degree(std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::BadIndices, "Gamma^n needs n >= 1");
  if (n > limits.gamma_cap) {
    throw Error(ErrorKind::GammaCapExceeded,
                "n = " + std::to_string(n) + " exceeds the Gamma cap " + std::to_string(limits.gamma_cap));
  }
}

Subgroup min_conjugate(const PermGroup& g, const Subgroup& k) {
  Subgroup best = k;
  for (ElemId x = 0; x < g.order(); ++x) {
    Subgroup c = k.conjugate(x);
    if (c < best) best = c;
  }
  return best;
}

// p-power order: returns p, 1 for the trivial group, 0 otherwise.
std::size_t prime_of_order(std::size_t order) {
  if (order == 1) return 1;
  std::size_t p = 2;
  while (order % p != 0) ++p;
  while (order % p == 0) order /= p;
  return order == 1 ? p : 0;
}

std::size_t orbit_count_on_points(const PermGroup& g, const Subgroup& k) {
  std::vector<std::size_t> parent(g.degree());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElemId e : k.generators()) {
    const Perm& s = g.element(e);
    for (std::size_t x = 0; x < g.degree(); ++x) parent[find(x)] = find(s(static_cast<Perm::Point>(x)));
  }
  std::size_t count = 0;
  for (std::size_t x = 0; x < g.degree(); ++x) count += find(x) == x;
  return count;
}

Subgroup point_stabilizer(const PermGroup& g, Perm::Point point) {
  std::vector<ElemId> elems;
  for (ElemId e = 0; e < g.order(); ++e) {
    if (g.element(e)(point) == point) elems.push_back(e);
  }
  return Subgroup::from_elements(g, std::move(elems));
}

GammaSplitTable assemble_gamma(std::size_t n, const PermGroup& sn, std::vector<Subgroup> reps) {
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  GammaSplitTable table{n, sn, {}, true};
  const Subgroup sn_1 = point_stabilizer(sn, static_cast<Perm::Point>(n - 1));
  for (const Subgroup& k : reps) {
    GammaRow row{k, structure_name(k), k.order(), prime_of_order(k.order())};
    row.orbit_count = orbit_count_on_points(sn, k);
    row.weyl_order = normalizer_quotient_order(sn, k);
    row.double_cosets = double_cosets(sn, k, sn_1).size();
    row.identity_holds = row.orbit_count == row.double_cosets;
    table.pass = table.pass && row.identity_holds;
    table.rows.push_back(std::move(row));
  }
  return table;
}

// Generators of a Sylow p-subgroup of S_n: one iterated wreath product of
// C_p per base-p digit block, acting on consecutive points.
std::vector<Perm> sylow_generators(std::size_t n, std::size_t p) {
  std::vector<Perm> gens;
  std::size_t offset = 0;
  std::size_t block = 1;
  std::vector<std::size_t> blocks;
  for (std::size_t rest = n; rest > 0; rest /= p) blocks.push_back(rest % p);
  std::vector<std::size_t> sizes(blocks.size());
  for (std::size_t j = 0; j < blocks.size(); ++j, block *= p) sizes[j] = block;
  for (std::size_t j = blocks.size(); j-- > 0;) {
    for (std::size_t copy = 0; copy < blocks[j]; ++copy) {
      for (std::size_t level = 1, span = p; span <= sizes[j]; ++level, span *= p) {
        const std::size_t shift = span / p;
        std::vector<Perm::Point> img(n);
        for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Perm::Point>(x);
        for (std::size_t x = 0; x < span; ++x) img[offset + x] = static_cast<Perm::Point>(offset + (x + shift) % span);
        gens.emplace_back(std::move(img));
      }
      offset += sizes[j];
    }
  }
  return gens;
}

std::size_t p_part_of_factorial(std::size_t n, std::size_t p) {
  std::size_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) {
    for (std::size_t x = i; x % p == 0; x /= p) out *= p;
  }
  return out;
}

}  // namespace

GammaSplitTable gamma_splitting(std::size_t n, const Limits& limits) {
  check_gamma_degree(n, limits);
  const PermGroup sn = symmetric_group(n, limits);
  std::vector<Subgroup> reps{Subgroup::trivial(sn)};
  for (std::size_t p = 2; p <= n; ++p) {
    if (!is_prime(p)) continue;
    const Subgroup sylow = Subgroup::generated_by(sn, sylow_generators(n, p));
    if (sylow.order() != p_part_of_factorial(n, p)) {
      throw Error(ErrorKind::InvariantViolation, "Sylow " + std::to_string(p) + "-subgroup of S" + std::to_string(n) +
                                                     " has order " + std::to_string(sylow.order()));
    }
    const PermGroup& as_group = sylow.as_group();
    for (const Subgroup& k : as_group.lattice(limits).subgroups()) {
      std::vector<ElemId> elems;
      for (ElemId e : k.elements()) elems.push_back(sn.index_of(as_group.element(e)));
      std::sort(elems.begin(), elems.end());
      reps.push_back(min_conjugate(sn, Subgroup::from_elements(sn, std::move(elems))));
    }
  }
  return assemble_gamma(n, sn, std::move(reps));
}

GammaSplitTable gamma_splitting_by_lattice(std::size_t n, const Limits& limits) {
  check_gamma_degree(n, limits);
  const PermGroup sn = symmetric_group(n, limits);
  const auto lat = sn.lattice(limits);
  std::vector<Subgroup> reps;
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    if (prime_of_order(lat.class_info(c).order()) == 0) continue;
    std::optional<Subgroup> best;
    for (std::size_t i : lat.class_members(c)) {
      Subgroup s = lat.subgroup(i);
      if (!best || s < *best) best = s;
    }
    reps.push_back(*best);
  }
  return assemble_gamma(n, sn, std::move(reps));
}

GammaTowerDescriptors gamma_tower_descriptors(std::size_t n, std::size_t k, const Limits& limits) {
  check_gamma_degree(n, limits);
  if (k < 1 || k > n) {
    throw Error(ErrorKind::BadIndices, "need 1 <= k <= n, got k = " + std::to_string(k) + ", n = " + std::to_string(n));
  }
  const PermGroup sn = symmetric_group(n, limits);
  const auto lat = sn.lattice(limits);
  GammaTowerDescriptors out{n, k, Family{sn, {}}, Family{sn, {}}, {}, {}, {}};
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    const std::size_t orbits = orbit_count_on_points(sn, lat.class_info(c).representative);
    if (orbits > k) out.family_k.classes.insert(c);
    if (orbits > k - 1) out.family_k_minus_1.classes.insert(c);
  }
  const Family everything = all_classes(sn, limits);
  auto truncation = [&](const Family& f) {
    return f == everything ? LocalizationDescriptor::zero_functor(sn) : LocalizationDescriptor{everything, f, false};
  };
  const auto pk = truncation(out.family_k);
  const auto pk1 = truncation(out.family_k_minus_1);
  const auto layer = out.family_k_minus_1 == out.family_k
                         ? LocalizationDescriptor::zero_functor(sn)
                         : LocalizationDescriptor{out.family_k_minus_1, out.family_k, false};
  const auto smash_k1 = truncation(out.family_k_minus_1);
  const std::vector<std::vector<LocalizationDescriptor>> squares{{pk}, {layer}, {pk1}, {smash_k1, layer}};

  const std::string gamma = "Gamma^" + std::to_string(n);
  const std::string gamma_latex = "\\Gamma^{" + std::to_string(n) + "}";
  const std::string fixed = sn.id();
  const std::string fixed_latex = latex_name(sn.id());
  for (const auto& factors : squares) {
    const std::string plain = render_composite(factors, "G");
    const std::string tex = render_composite_latex(factors, "G");
    out.corners.push_back(plain == "G" ? gamma : plain == "0" ? "0" : "(" + plain + ")^" + fixed);
    out.corners_latex.push_back(tex == "G"   ? gamma_latex
                                : tex == "0" ? "0"
                                             : "\\big(" + tex + "\\big)^{" + fixed_latex + "}");
  }
  out.truncation = out.corners.front();
  return out;
}

}  // namespace normtower
