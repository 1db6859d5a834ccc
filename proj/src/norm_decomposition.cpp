#include "normtower/norm_decomposition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace normtower {

namespace {

constexpr std::uint32_t kUnassigned = std::numeric_limits<std::uint32_t>::max();

Subgroup lattice_instance(const PermGroup& g, const Subgroup& k) {
  if (!k.parent().same_as(g)) throw Error(ErrorKind::SubgroupMismatch, "subgroup does not belong to " + g.id());
  return g.lattice().canonical(k);
}

std::vector<std::size_t> powers(std::size_t base, std::size_t m) {
  std::vector<std::size_t> w(m, 1);
  for (std::size_t i = m; i-- > 1;) w[i - 1] = w[i] * base;
  return w;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace

std::size_t LambdaClass::image_size() const {
  std::vector<char> hit(n, 0);
  for (std::size_t v : representative) hit[v] = 1;
  return static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 1));
}

std::string LambdaClass::representative_string() const {
  std::vector<std::string> parts;
  for (std::size_t v : representative) parts.push_back(std::to_string(v + 1));
  return join(parts, " ");
}

// Lambda classes -----------------------------------------------------------------

LambdaTable lambda_table(const PermGroup& g, const Subgroup& h_in, std::size_t n, const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::BadIndices, "lambda classes need n >= 1");
  const Subgroup h = lattice_instance(g, h_in);
  const CosetTable lc = left_cosets(h);
  const std::size_t m = lc.reps.size();
  const std::size_t total = coinduced_size(n, m);
  if (total > limits.enumeration_cap) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                std::to_string(n) + "^" + std::to_string(m) + " maps G/H -> [n] exceed the cap of " +
                    std::to_string(limits.enumeration_cap));
  }
  const auto weight = powers(n, m);
  const auto& gens = g.generator_ids();
  // gen_perm[s][i]: the coset s c_i H
  std::vector<std::vector<std::size_t>> gen_perm;
  for (ElemId s : gens) {
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = lc.coset_of[g.mul(s, lc.reps[i])];
    gen_perm.push_back(std::move(perm));
  }
  auto decode = [&](std::size_t code, std::vector<std::size_t>& digits) {
    for (std::size_t i = 0; i < m; ++i) digits[i] = code / weight[i] % n;
  };

  LambdaTable table;
  table.class_of_code.assign(total, kUnassigned);
  std::vector<std::size_t> digits(m), orbit;
  const auto lat = g.lattice();
  for (std::size_t start = 0; start < total; ++start) {
    if (table.class_of_code[start] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(table.classes.size());
    orbit.assign(1, start);
    table.class_of_code[start] = id;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      decode(orbit[qi], digits);
      for (const auto& perm : gen_perm) {
        // (s lambda)(s c) = lambda(c)
        std::size_t image = 0;
        for (std::size_t i = 0; i < m; ++i) image += weight[perm[i]] * digits[i];
        if (table.class_of_code[image] == kUnassigned) {
          table.class_of_code[image] = id;
          orbit.push_back(image);
        }
      }
    }

    LambdaClass cls{g, h, n, std::vector<std::size_t>(m), start, h, 0, orbit.size(), false, {}};
    decode(start, cls.representative);
    std::vector<ElemId> stab;
    for (ElemId e = 0; e < g.order(); ++e) {
      bool fixes = true;
      for (std::size_t i = 0; i < m && fixes; ++i) {
        fixes = cls.representative[lc.coset_of[g.mul(e, lc.reps[i])]] == cls.representative[i];
      }
      if (fixes) stab.push_back(e);
    }
    cls.stabilizer = lat.canonical(Subgroup::from_elements(g, std::move(stab)));
    cls.stabilizer_class = lat.class_of(cls.stabilizer);
    if (cls.orbit_size * cls.stabilizer.order() != g.order()) {
      throw Error(ErrorKind::InvariantViolation, "orbit-stabilizer count fails for lambda = " +
                                                     cls.representative_string());
    }
    cls.surjective = cls.image_size() == n;
    const PermGroup& gl = cls.stabilizer.as_group();
    const auto gl_lat = gl.lattice();
    for (const auto& dc : double_cosets(g, cls.stabilizer, h)) {
      Subgroup h_g = lat.canonical(cls.stabilizer.intersect(h.conjugate(dc.representative)));
      const std::size_t h_g_class = gl_lat.class_of(Subgroup::of(gl, h_g.as_group()));
      cls.factors.push_back(
          LambdaFactor{dc.representative, h_g, h_g_class, cls.representative[lc.coset_of[dc.representative]]});
    }
    table.classes.push_back(std::move(cls));
  }

  std::vector<std::size_t> order(table.classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return table.classes[a].image_size() < table.classes[b].image_size();
  });
  std::vector<std::uint32_t> new_id(order.size());
  std::vector<LambdaClass> sorted;
  for (std::size_t i = 0; i < order.size(); ++i) {
    new_id[order[i]] = static_cast<std::uint32_t>(i);
    sorted.push_back(std::move(table.classes[order[i]]));
  }
  for (auto& c : table.class_of_code) c = new_id[c];
  table.classes = std::move(sorted);
  return table;
}

std::vector<LambdaClass> lambda_classes(const PermGroup& g, const Subgroup& h, std::size_t n, const Limits& limits) {
  return lambda_table(g, h, n, limits).classes;
}

// Coinduction with index maps ------------------------------------------------------

IndexedCoinduction::IndexedCoinduction(const PermGroup& g, const Subgroup& h_in, const std::vector<GSet>& xs,
                                       const Limits& limits)
    : coind_(GSet::empty(g)), n_(xs.size()) {
  if (xs.empty()) throw Error(ErrorKind::BadIndices, "coinduction of an empty tuple of H-sets");
  const Subgroup h = lattice_instance(g, h_in);
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(Subgroup::of(g, xs[i].group()) == h)) {
      throw Error(ErrorKind::SubgroupMismatch, "input " + std::to_string(i + 1) + " is not an H-set");
    }
    part_of.insert(part_of.end(), xs[i].size(), i);
  }
  const GSet joined = disjoint_union(xs, xs.front().group());
  coind_ = coinduce(joined, g, limits);

  const CosetTable rc = right_cosets(h);
  const CosetTable lc = left_cosets(h);
  const std::size_t m = rc.reps.size();
  const std::size_t s = joined.size();
  // The right coset H r carries the value at r; it corresponds to r^-1 H.
  std::vector<std::size_t> code_weight(m);
  const auto nw = powers(n_, m);
  for (std::size_t i = 0; i < m; ++i) code_weight[i] = nw[lc.coset_of[g.inv(rc.reps[i])]];

  codes_.resize(coind_.size());
  std::vector<std::size_t> digits(m, 0);
  for (std::size_t p = 0; p < coind_.size(); ++p) {
    std::size_t code = 0;
    for (std::size_t i = 0; i < m; ++i) code += code_weight[i] * part_of[digits[i]];
    codes_[p] = code;
    for (std::size_t i = m; i-- > 0;) {
      if (++digits[i] < s) break;
      digits[i] = 0;
    }
  }
}

GSet f_lambda(const LambdaClass& lambda, const IndexedCoinduction& coind) {
  std::vector<Point> points;
  for (Point p = 0; p < coind.coinduced().size(); ++p) {
    if (coind.code(p) == lambda.code) points.push_back(p);
  }
  try {
    return sub_gset(coind.coinduced(), lambda.stabilizer, points);
  } catch (const Error&) {
    throw Error(ErrorKind::InvariantViolation,
                "F_lambda for lambda = " + lambda.representative_string() + " is not stable under G_lambda");
  }
}

GSet f_lambda(const LambdaClass& lambda, const std::vector<GSet>& xs, const Limits& limits) {
  if (xs.size() != lambda.n) throw Error(ErrorKind::BadIndices, "lambda class and input tuple differ in length");
  return f_lambda(lambda, IndexedCoinduction(lambda.group, lambda.h, xs, limits));
}

GSet f_lambda_product_form(const LambdaClass& lambda, const std::vector<GSet>& xs, const Limits& limits,
                           const GSet* reference) {
  if (xs.size() != lambda.n) throw Error(ErrorKind::BadIndices, "lambda class and input tuple differ in length");
  const PermGroup& gl = lambda.stabilizer.as_group();
  GSet product = GSet::trivial(gl, 1);
  for (const auto& f : lambda.factors) {
    GSet twisted = twisted_restrict(xs[f.index], f.h_g, lambda.group.element(f.representative));
    product = combine(CombineKind::Product, product, coinduce(twisted, gl, limits));
  }
  const GSetIsoClass got = canonical_form(product, limits);
  const GSetIsoClass want =
      reference ? canonical_form(*reference, limits) : canonical_form(f_lambda(lambda, xs, limits), limits);
  if (!(got == want)) {
    throw Error(ErrorKind::IsoMismatch, "product form " + got.to_string() + " differs from F_lambda " +
                                            want.to_string() + " for lambda = " + lambda.representative_string());
  }
  return product;
}

// Reports ---------------------------------------------------------------------------

DecompositionReport verify_coind_decomposition(const LambdaTable& table, const IndexedCoinduction& coind,
                                               const std::vector<GSet>& xs, const Limits& limits) {
  const GSet& total_set = coind.coinduced();
  const PermGroup& g = total_set.group();
  if (table.classes.empty() || table.classes.front().n != coind.n() || xs.size() != coind.n()) {
    throw Error(ErrorKind::BadIndices, "lambda table and coinduction disagree on n");
  }
  const Subgroup& h = table.classes.front().h;
  DecompositionReport report{g, h, {}, {}, canonical_form(total_set, limits), zero_class(g), false, {}};
  for (const auto& x : xs) report.inputs.push_back(canonical_form(x, limits));

  std::vector<std::vector<Point>> in_orbit(table.classes.size()), in_fiber(table.classes.size());
  for (Point p = 0; p < total_set.size(); ++p) {
    const std::size_t code = coind.code(p);
    const std::size_t c = table.class_of_code[code];
    in_orbit[c].push_back(p);
    if (code == table.classes[c].code) in_fiber[c].push_back(p);
  }

  const Subgroup whole = Subgroup::whole(g);
  bool all_match = true;
  for (std::size_t c = 0; c < table.classes.size(); ++c) {
    const LambdaClass& lambda = table.classes[c];
    DecompositionEntry entry{lambda, in_fiber[c].size(), zero_class(g), zero_class(g), false};
    GSet fiber = GSet::empty(g);
    try {
      fiber = sub_gset(total_set, lambda.stabilizer, in_fiber[c]);
    } catch (const Error&) {
      throw Error(ErrorKind::InvariantViolation,
                  "F_lambda for lambda = " + lambda.representative_string() + " is not stable under G_lambda");
    }
    entry.induced = canonical_form(induce(fiber, g), limits);
    entry.direct = canonical_form(sub_gset(total_set, whole, in_orbit[c]), limits);
    entry.matches = entry.induced == entry.direct;
    if (!entry.matches && all_match) {
      report.detail = "class " + lambda.representative_string() + ": induced " + entry.induced.to_string() +
                      " but the orbit's points give " + entry.direct.to_string();
    }
    all_match = all_match && entry.matches;
    report.sum += entry.induced;
    report.entries.push_back(std::move(entry));
  }
  const bool totals = report.sum == report.total;
  if (all_match && !totals) {
    report.detail = "sum " + report.sum.to_string() + " differs from total " + report.total.to_string();
  }
  report.pass = all_match && totals;
  return report;
}

DecompositionReport verify_coind_decomposition(const PermGroup& g, const Subgroup& h, const std::vector<GSet>& xs,
                                               const Limits& limits) {
  const LambdaTable table = lambda_table(g, h, xs.size(), limits);
  const IndexedCoinduction coind(g, h, xs, limits);
  return verify_coind_decomposition(table, coind, xs, limits);
}

MackeyReport verify_mackey(const GSet& coinduced, const Subgroup& h_in, const Subgroup& k_in, const GSet& x,
                           const Limits& limits) {
  const PermGroup& g = coinduced.group();
  const Subgroup h = lattice_instance(g, h_in);
  const Subgroup k = lattice_instance(g, k_in);
  MackeyReport report{g, h, k, {}, canonical_form(restrict(coinduced, k), limits), zero_class(k.as_group()), false};
  const PermGroup& kg = k.as_group();
  GSet product = GSet::trivial(kg, 1);
  for (const auto& dc : double_cosets(g, k, h)) {
    const Subgroup h_g = g.lattice().canonical(k.intersect(h.conjugate(dc.representative)));
    GSet twisted = twisted_restrict(x, h_g, g.element(dc.representative));
    product = combine(CombineKind::Product, product, coinduce(twisted, kg, limits));
    report.factors.push_back({dc.representative, h_g, dc.size});
  }
  report.rhs = canonical_form(product, limits);
  report.pass = report.lhs == report.rhs;
  return report;
}

MackeyReport verify_mackey(const PermGroup& g, const Subgroup& h, const Subgroup& k, const GSet& x,
                           const Limits& limits) {
  if (!(Subgroup::of(g, x.group()) == h)) throw Error(ErrorKind::SubgroupMismatch, "X is not an H-set");
  return verify_mackey(coinduce(x, g, limits), h, k, x, limits);
}

std::vector<CrossEffectSummand> cross_effect_summands(const PermGroup& g, const Subgroup& h, std::size_t n,
                                                      const Limits& limits) {
  std::vector<CrossEffectSummand> out;
  const auto lat = g.lattice(limits);
  const std::string g_name = lat.class_info(lat.whole_class()).name;
  for (auto& lambda : lambda_classes(g, h, n, limits)) {
    if (!lambda.surjective) continue;
    if (lambda.factors.size() < n) {
      throw Error(ErrorKind::InvariantViolation, "surjective lambda = " + lambda.representative_string() +
                                                     " has fewer than n double cosets");
    }
    CrossEffectSummand s{lambda, {}, {}};
    const std::string gl_name = lat.class_info(lambda.stabilizer_class).name;
    std::vector<std::string> smash;
    for (const auto& f : lambda.factors) {
      const std::string hg_name = structure_name(f.h_g);
      s.factors.push_back({hg_name, f.h_g_class, f.index});
      std::string term = "X" + std::to_string(f.index + 1);
      if (f.h_g.order() < lambda.h.order()) {
        term = "Res^{" + structure_name(lambda.h) + "}_{" + hg_name + "} " + term;
      }
      if (f.h_g.order() < lambda.stabilizer.order()) term = "N_{" + hg_name + "}^{" + gl_name + "}(" + term + ")";
      smash.push_back(term);
    }
    s.descriptor = "Ind_{" + gl_name + "}^{" + g_name + "}(" + join(smash, " ^ ") + ")";
    s.lambda = std::move(lambda);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace normtower
