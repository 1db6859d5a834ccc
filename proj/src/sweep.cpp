#include "normtower/sweep.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "normtower/norm_decomposition.hpp"
#include "normtower/orbit_poset.hpp"
#include "normtower/tower.hpp"

namespace normtower {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

// Group order from a catalog name, without building the group.
std::size_t catalog_order(const std::string& name) {
  std::size_t order = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= name.size(); ++i) {
    if (i < name.size() && name[i] != 'x') continue;
    const char family = name[start];
    const std::size_t n = std::stoul(name.substr(start + 1, i - start - 1));
    if (family == 'C') order *= n;
    if (family == 'D') order *= 2 * n;
    if (family == 'S') {
      for (std::size_t f = 2; f <= n; ++f) order *= f;
    }
    start = i + 1;
  }
  return order;
}

// All up-closed class sets (families), in index order, up to `cap` of them.
// Returns false when the cap cut the enumeration short.
bool enumerate_families(const OrbitPoset& poset, std::size_t cap, std::vector<ClassSet>& out) {
  ClassSet current;
  bool complete = true;
  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (!complete) return;
    if (c == poset.size()) {
      if (out.size() >= cap) {
        complete = false;
        return;
      }
      out.push_back(current);
      return;
    }
    self(self, c + 1);
    bool allowed = true;
    for (std::size_t d = 0; d < c && allowed; ++d) {
      if (poset.geq(d, c) && !current.count(d)) allowed = false;
    }
    if (allowed) {
      current.insert(c);
      self(self, c + 1);
      current.erase(c);
    }
  };
  rec(rec, 0);
  return complete;
}

struct Recorder {
  SweepResult& result;
  std::string group;
  std::string h;

  void pass(const std::string& suite, std::size_t count = 1) { result.suite(suite).pass += count; }
  void fail(const std::string& suite, const std::string& detail, const std::string& kind = {}) {
    result.suite(suite).fail += 1;
    result.failures.push_back(SweepEvent{suite, group, h, detail, kind, 1});
  }
  void skip(const std::string& suite, const std::string& detail, std::size_t count) {
    if (count == 0) return;
    result.suite(suite).skip += count;
    result.skips.push_back(SweepEvent{suite, group, h, detail, {}, count});
  }
  void check(const std::string& suite, bool ok, const std::string& detail) {
    if (ok) {
      pass(suite);
    } else {
      fail(suite, detail);
    }
  }
};

void bijection_suite(const OrbitPoset& poset, const SweepConfig& config, Recorder& rec) {
  std::vector<ClassSet> families;
  const bool complete = enumerate_families(poset, config.max_families, families);
  if (!complete) {
    // Structured families: every principal family and every up-closure of a
    // pair of classes.
    families.clear();
    for (std::size_t a = 0; a < poset.size(); ++a) {
      for (std::size_t b = a; b < poset.size(); ++b) {
        ClassSet f;
        for (std::size_t d = 0; d < poset.size(); ++d) {
          if (poset.geq(d, a) || poset.geq(d, b)) f.insert(d);
        }
        families.push_back(std::move(f));
      }
    }
    families.push_back({});
    rec.skip("bijection", "family enumeration exceeded " + std::to_string(config.max_families) +
                              "; checked principal and two-generated families only",
             1);
  }
  const PermGroup& g = poset.group();
  std::size_t passed = 0;
  for (const ClassSet& classes : families) {
    if (!is_family(poset, classes)) {
      rec.fail("bijection", "enumerated set " + family_name(Family{g, classes}) + " is not a family");
      continue;
    }
    const Family f{g, classes};
    const PosetInterval i = family_to_interval(f);
    const bool family_side = is_interval(poset, i.members) && interval_to_family(poset, i) == f;
    const bool interval_side = family_to_interval(interval_to_family(poset, i)) == i;
    if (family_side && interval_side) {
      ++passed;
    } else {
      rec.fail("bijection", "roundtrip fails for " + family_name(f));
    }
  }
  // An interval without G/e has no family.
  if (poset.size() > 1) {
    try {
      interval_to_family(poset, PosetInterval{{poset.minimum()}});
      rec.fail("bijection", "{G/G} was accepted as a family");
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotCoveringMaximum) {
        ++passed;
      } else {
        rec.fail("bijection", e.what(), std::string(to_string(e.kind())));
      }
    }
  }
  rec.pass("bijection", passed);
}

void tower_suite(const PermGroup& g, const Subgroup& h, const Limits& limits, Recorder& rec) {
  const TowerReport report = tower_report(g, h, limits);
  const auto lat = g.lattice(limits);
  const bool bottom = report.levels.front().family.classes.size() == lat.class_count();
  const bool top = report.levels.back().family.empty() && report.levels.back().truncation.is_identity();
  const bool jumps = descriptor_changes(report) == report.jump_set;
  rec.check("tower", bottom && top && jumps,
            std::string(bottom ? "" : "F_0 is not everything; ") + (top ? "" : "F_top is not empty; ") +
                (jumps ? "" : "descriptor changes differ from the jump set"));
}

void monotonicity_suite(const OrbitPoset& poset, const DegreeMap& q, Recorder& rec) {
  for (std::size_t a = 0; a < poset.size(); ++a) {
    for (std::size_t b = 0; b < poset.size(); ++b) {
      if (poset.geq(a, b) && q(a) < q(b)) {
        rec.fail("monotonicity", poset.label(a) + " >= " + poset.label(b) + " but q drops");
        return;
      }
    }
  }
  rec.pass("monotonicity");
}

std::optional<GSet> corrupted(const GSet& x) {
  if (x.size() < 2) return std::nullopt;
  const PermGroup& g = x.group();
  std::vector<Point> table;
  for (ElemId e = 0; e < g.order(); ++e) {
    auto row = x.row(e);
    table.insert(table.end(), row.begin(), row.end());
  }
  // The identity now moves point 0.
  std::swap(table[0], table[1]);
  return GSet::unchecked(g, x.size(), std::move(table));
}

void arity_cases(const PermGroup& g, const Subgroup& h, std::size_t n, std::size_t group_index, std::size_t h_index,
                 const SweepConfig& config, bool& fault_pending, Recorder& rec) {
  const std::size_t index = g.order() / h.order();
  const bool lemma = g.order() <= config.lemma_max_order;
  const std::size_t k_classes = g.lattice(config.limits).class_count();
  Limits limits = config.limits;
  limits.enumeration_cap = std::min(limits.enumeration_cap, config.max_points);

  auto skip_all = [&](std::size_t tuples, const std::string& why) {
    rec.skip("decomposition", why, tuples);
    rec.skip("mackey", why, tuples * k_classes);
    if (lemma) rec.skip("lemma", why, tuples);
  };
  if (coinduced_size(n, index) > config.max_points) {
    skip_all(config.tuples_per_arity, "n = " + std::to_string(n) + ": " + std::to_string(n) + "^" +
                                          std::to_string(index) + " index maps exceed the point budget");
    return;
  }
  LambdaTable table;
  try {
    table = lambda_table(g, h, n, limits);
  } catch (const Error& e) {
    rec.fail("decomposition", "lambda table: " + std::string(e.what()), std::string(to_string(e.kind())));
    return;
  }
  for (const auto& lambda : table.classes) {
    if (!lambda.surjective) continue;
    rec.check("surjectivity", lambda.factors.size() >= n,
              "lambda " + lambda.representative_string() + " has " + std::to_string(lambda.factors.size()) +
                  " double cosets for n = " + std::to_string(n));
  }

  std::size_t budget_skips = 0;
  for (std::size_t t = 0; t < config.tuples_per_arity; ++t) {
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(group_index), static_cast<std::uint64_t>(h_index),
                      static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(seq);
    std::vector<GSet> xs;
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back(sample_gset(h.as_group(), rng, config.max_set_size));
      total += xs.back().size();
    }
    if (coinduced_size(total, index) > config.max_points) {
      ++budget_skips;
      continue;
    }
    std::string sizes;
    for (const auto& x : xs) sizes += (sizes.empty() ? "" : ",") + std::to_string(x.size());
    const std::string where = "n = " + std::to_string(n) + ", sizes " + sizes + ", tuple " + std::to_string(t);
    ++rec.result.cases;
    try {
      const IndexedCoinduction coind(g, h, xs, limits);
      if (fault_pending) {
        if (const auto bad = corrupted(coind.coinduced())) {
          fault_pending = false;
          canonical_form(*bad, limits);
          rec.fail("decomposition", where + ": injected corruption was not detected");
        }
      }
      const auto report = verify_coind_decomposition(table, coind, xs, limits);
      rec.check("decomposition", report.pass, where + ": " + report.detail);

      const GSet x = disjoint_union(xs, h.as_group());
      for (const auto& kc : g.lattice(config.limits).classes()) {
        const auto mackey = verify_mackey(coind.coinduced(), h, kc.representative, x, limits);
        rec.check("mackey", mackey.pass,
                  where + ", K = " + kc.display() + ": " + mackey.lhs.to_string() + " vs " + mackey.rhs.to_string());
      }
      if (lemma) {
        for (const auto& lambda : table.classes) {
          const GSet f = f_lambda(lambda, coind);
          try {
            f_lambda_product_form(lambda, xs, limits, &f);
            rec.pass("lemma");
          } catch (const Error& e) {
            rec.fail("lemma", where + ", lambda " + lambda.representative_string() + ": " + e.what(),
                     std::string(to_string(e.kind())));
          }
        }
      }
    } catch (const Error& e) {
      rec.fail("decomposition", where + ": " + e.what(), std::string(to_string(e.kind())));
    }
  }
  if (budget_skips) {
    skip_all(budget_skips, "n = " + std::to_string(n) + ": coinduced set exceeds the point budget");
  }
}

}  // namespace

std::vector<std::string> sweep_catalog(std::size_t max_order) {
  std::vector<std::string> names;
  for (std::size_t n = 1; n <= max_order; ++n) names.push_back("C" + std::to_string(n));
  for (std::size_t n = 3; 2 * n <= max_order; ++n) names.push_back("D" + std::to_string(n));
  for (const char* name : {"S3", "S4", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6", "C2xS3", "C2xC8", "C4xC4",
                           "C2xC2xC4", "C2xC2xC2xC2", "C2xD4", "C3xC6", "C3xS3", "C2xC10", "C2xC12", "C2xC2xC6",
                           "C4xS3", "C2xD6", "C3xD4"}) {
    if (catalog_order(name) <= max_order) names.emplace_back(name);
  }
  std::stable_sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    return catalog_order(a) < catalog_order(b);
  });
  return names;
}

GSet sample_gset(const PermGroup& g, std::mt19937_64& rng, std::size_t max_size) {
  return sample_gset_of_size(g, rng, uniform(rng, max_size + 1));
}

GSet sample_gset_of_size(const PermGroup& g, std::mt19937_64& rng, std::size_t size) {
  const auto subs = g.lattice().subgroups();
  std::size_t remaining = size;
  std::vector<GSet> parts;
  while (remaining > 0) {
    std::vector<const Subgroup*> fitting;
    for (const auto& k : subs) {
      if (g.order() / k.order() <= remaining) fitting.push_back(&k);
    }
    const Subgroup& k = *fitting[uniform(rng, fitting.size())];
    parts.push_back(GSet::cosets(k));
    remaining -= g.order() / k.order();
  }
  const GSet joined = disjoint_union(parts, g);
  const std::size_t n = joined.size();
  std::vector<Point> sigma(n);
  for (std::size_t i = 0; i < n; ++i) sigma[i] = static_cast<Point>(i);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::vector<Point> table(g.order() * n);
  for (ElemId e = 0; e < g.order(); ++e) {
    for (std::size_t p = 0; p < n; ++p) table[e * n + sigma[p]] = sigma[joined.act(e, static_cast<Point>(p))];
  }
  return GSet::from_table(g, n, std::move(table));
}

SuiteCounts& SweepResult::suite(const std::string& name) {
  for (auto& s : suites) {
    if (s.name == name) return s;
  }
  suites.push_back(SuiteCounts{name});
  return suites.back();
}

const SuiteCounts* SweepResult::find(const std::string& name) const {
  for (const auto& s : suites) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SweepResult run_sweep(const SweepConfig& config, const std::function<void(const std::string&)>& progress) {
  SweepResult result;
  for (const char* name : {"decomposition", "mackey", "lemma", "surjectivity", "tower", "monotonicity", "bijection"}) {
    result.suite(name);
  }
  bool fault_pending = config.inject_fault;
  const auto names = sweep_catalog(config.max_order);
  for (std::size_t gi = 0; gi < names.size(); ++gi) {
    if (progress) progress(names[gi]);
    Recorder rec{result, names[gi], {}};
    try {
      const PermGroup g = build_catalog_group(names[gi], config.limits);
      const OrbitPoset poset(g, config.limits);
      ++result.groups;
      bijection_suite(poset, config, rec);
      const auto classes = poset.lattice().classes();
      for (std::size_t hi = 0; hi < classes.size(); ++hi) {
        const Subgroup& h = classes[hi].representative;
        rec.h = classes[hi].display();
        tower_suite(g, h, config.limits, rec);
        monotonicity_suite(poset, degree_map(g, h, config.limits), rec);
        for (std::size_t n = 1; n <= config.max_arity; ++n) arity_cases(g, h, n, gi, hi, config, fault_pending, rec);
      }
    } catch (const Error& e) {
      rec.fail("decomposition", e.what(), std::string(to_string(e.kind())));
    }
  }
  return result;
}

SweepResult run_example_checks(const Limits& limits) {
  SweepResult result;
  Recorder rec{result, {}, {}};
  auto guarded = [&](const std::string& group, const std::function<void()>& body) {
    rec.group = group;
    try {
      body();
    } catch (const Error& e) {
      rec.fail("examples", e.what(), std::string(to_string(e.kind())));
    }
  };
  result.suite("examples");

  for (std::size_t p : {2, 3, 5}) {
    const std::string c = "C" + std::to_string(p);
    guarded(c, [&] {
      const PermGroup g = build_catalog_group(c, limits);
      const Subgroup e = Subgroup::trivial(g);
      const auto tower = tower_report(g, e, limits);
      bool free_only = true;
      for (std::size_t n = 1; n < p; ++n) free_only = free_only && tower.levels[n].family.classes == ClassSet{0};
      rec.check("examples", free_only, "F_n != {e} for some 1 <= n < p");
      const auto plan = fracture_plan(g, e, 1, p, p, limits);
      const std::vector<std::string> expected{"N", "F((E" + c + ")_+, N)", "~E" + c + " ^ N",
                                              "~E" + c + " ^ F((E" + c + ")_+, N)"};
      bool corners = plan.corners.size() == 4;
      for (std::size_t i = 0; corners && i < 4; ++i) corners = plan.corners[i].equivariant == expected[i];
      rec.check("examples", corners, "C_p square corners differ");
      rec.check("examples", plan.hypothesis_pass, "C_p square reports hypothesis violations");
    });
  }

  for (std::size_t p : {2, 3, 5, 7}) {
    for (std::size_t k = 1, pk = p; pk <= 64; ++k, pk *= p) {
      guarded("C" + std::to_string(pk), [&] {
        const auto r = cpk_tower(p, k, limits);
        for (const auto& c : r.checks) rec.check("examples", c.pass, c.name + " (got " + c.detail + ")");
      });
    }
  }

  for (std::size_t n = 1; n <= std::min<std::size_t>(5, limits.gamma_cap); ++n) {
    guarded("S" + std::to_string(n), [&] {
      const auto a = gamma_splitting(n, limits);
      const auto b = gamma_splitting_by_lattice(n, limits);
      bool same = a.rows.size() == b.rows.size();
      for (std::size_t i = 0; same && i < a.rows.size(); ++i) {
        same = a.rows[i].representative == b.rows[i].representative && a.rows[i].prime == b.rows[i].prime &&
               a.rows[i].orbit_count == b.rows[i].orbit_count && a.rows[i].weyl_order == b.rows[i].weyl_order;
      }
      rec.check("examples", same, "Gamma table differs from the full lattice");
      rec.check("examples", a.pass, "double-coset count differs from orbit count");
    });
  }

  guarded("S3", [&] {
    const PermGroup s3 = build_catalog_group("S3", limits);
    const auto plan = fracture_plan(s3, Subgroup::trivial(s3), 2, 3, 6, limits);
    const OrbitPoset poset(s3, limits);
    const bool exact = plan.violations.size() == 1 && poset.label(plan.violations[0].upper) == "G/C2" &&
                       poset.label(plan.violations[0].lower) == "G/C3";
    rec.check("examples", exact, "S3 (2,3,6) violations are not exactly (G/C2, G/C3)");
  });
  return result;
}

}  // namespace normtower
