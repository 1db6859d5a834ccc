#include <gtest/gtest.h>

#include "normtower/tower.hpp"
#include "oracles.hpp"

using namespace normtower;

namespace {

std::size_t class_named(const PermGroup& g, const std::string& label) {
  const auto lat = g.lattice();
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    if (lat.class_label(c) == label) return c;
  }
  ADD_FAILURE() << "no class " << label << " in " << g.id();
  return 0;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(Descriptor, RenderingOfDegenerateCases) {
  auto c5 = build_catalog_group("C5");
  OrbitPoset poset(c5);
  EXPECT_EQ(LocalizationDescriptor::identity(c5).render(), "N");
  EXPECT_TRUE(LocalizationDescriptor::identity(c5).is_identity());
  EXPECT_EQ(LocalizationDescriptor::zero_functor(c5).render(), "0");
  EXPECT_EQ(localization_descriptor(poset, PosetInterval{}).render(), "0");
  EXPECT_EQ(localization_descriptor(poset, PosetInterval{{0}}).render(), "F((EC5)_+, N)");
  EXPECT_EQ(localization_descriptor(poset, PosetInterval{{1}}).render(), "~EC5 ^ N");
  EXPECT_EQ(localization_descriptor(poset, PosetInterval{{0, 1}}).render(), "N");
  EXPECT_EQ(localization_descriptor(poset, PosetInterval{{0}}).render_latex(), "F((EC_{5})_{+}, N_H^G)");
  EXPECT_EQ(localization_descriptor(poset, PosetInterval{{1}}).render_latex("X"), "\\widetilde{E}C_{5} \\wedge X");
}

TEST(Descriptor, GeneralFamiliesAreListed) {
  auto s3 = build_catalog_group("S3");
  OrbitPoset poset(s3);
  const std::size_t c2 = class_named(s3, "C2");
  const std::size_t c3 = class_named(s3, "C3");
  auto d = localization_descriptor(poset, PosetInterval{{c3}});
  EXPECT_EQ(d.render(), "F((E{e,C3})_+, ~ES3 ^ N)");
  EXPECT_EQ(family_name(Family{s3, {0, c2}}), "{e,C2}");
  EXPECT_EQ(family_name_latex(Family{s3, {0, c2}}), "\\mathcal{F}\\{e, C_{2}\\}");
}

TEST(Tower, CyclicOfPrimeOrder) {
  for (std::size_t p : {2, 3, 5, 7}) {
    auto g = build_catalog_group("C" + std::to_string(p));
    auto report = tower_report(g, Subgroup::trivial(g));
    EXPECT_EQ(report.top_degree, p);
    EXPECT_EQ(report.jump_set, (std::vector<std::size_t>{1, p}));
    const std::string smash = "~EC" + std::to_string(p) + " ^ N";
    EXPECT_EQ(report.levels[0].p_lower, "0");
    for (std::size_t n = 1; n < p; ++n) {
      EXPECT_EQ(report.levels[n].p_lower, smash);
      EXPECT_EQ(report.levels[n].family.classes, (ClassSet{0}));
      EXPECT_EQ(report.levels[n].p_upper, "F(~EC" + std::to_string(p) + ", N)");
    }
    EXPECT_EQ(report.levels[p].p_lower, "N");
    EXPECT_TRUE(report.levels[p].truncation.is_identity());
    EXPECT_EQ(descriptor_changes(report), report.jump_set);
  }
}

TEST(Tower, WholeGroupIsLinear) {
  auto s3 = build_catalog_group("S3");
  auto report = tower_report(s3, Subgroup::whole(s3));
  EXPECT_EQ(report.top_degree, 1u);
  EXPECT_EQ(report.jump_set, (std::vector<std::size_t>{1}));
  EXPECT_EQ(report.levels[0].p_lower, "0");
  EXPECT_EQ(report.levels[1].p_lower, "N");
}

TEST(Tower, SymmetricGroupWithTransposition) {
  auto s3 = build_catalog_group("S3");
  auto report = tower_report(s3, parse_subgroup(s3, "(1 2)"));
  EXPECT_EQ(report.jump_set, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(descriptor_changes(report), report.jump_set);
}

TEST(Tower, EndpointsAndJumpsOverCatalog) {
  for (const char* name : {"C1", "C4", "C6", "S3", "D4", "C2xC2", "D5", "C2xC4", "S4", "C3xS3"}) {
    auto g = build_catalog_group(name);
    for (const auto& h : g.lattice().subgroups()) {
      auto report = tower_report(g, h);
      EXPECT_EQ(report.levels.front().family.classes.size(), g.lattice().class_count());
      EXPECT_TRUE(report.levels.back().family.empty());
      EXPECT_TRUE(report.levels.back().truncation.is_identity());
      EXPECT_EQ(descriptor_changes(report), report.jump_set) << name;
    }
  }
}

TEST(Fracture, CyclicOfPrimeOrderSquare) {
  for (std::size_t p : {2, 3, 5}) {
    auto g = build_catalog_group("C" + std::to_string(p));
    const std::string c = "C" + std::to_string(p);
    auto plan = fracture_plan(g, Subgroup::trivial(g), 1, p, p);
    ASSERT_EQ(plan.corners.size(), 4u);
    EXPECT_EQ(plan.corners[0].equivariant, "N");
    EXPECT_EQ(plan.corners[1].equivariant, "F((E" + c + ")_+, N)");
    EXPECT_EQ(plan.corners[2].equivariant, "~E" + c + " ^ N");
    EXPECT_EQ(plan.corners[3].equivariant, "~E" + c + " ^ F((E" + c + ")_+, N)");
    EXPECT_EQ(plan.corners[0].goodwillie, "L_0 P_" + std::to_string(p) + " N");
    EXPECT_TRUE(plan.hypothesis_pass);
    EXPECT_TRUE(plan.goodwillie_families_valid);
  }
}

TEST(Fracture, TrivialGroup) {
  auto c1 = build_catalog_group("C1");
  auto plan = fracture_plan(c1, Subgroup::trivial(c1), 0, 1, 1);
  EXPECT_EQ(plan.corners[0].equivariant, "N");
  EXPECT_EQ(plan.corners[1].equivariant, "N");
  // q^-1([0,0]) is empty: P_0 of a reduced functor vanishes.
  EXPECT_EQ(plan.corners[2].equivariant, "0");
  EXPECT_EQ(plan.corners[3].equivariant, "0");
  EXPECT_TRUE(plan.hypothesis_pass);
}

TEST(Fracture, HypothesisViolationInSymmetricGroup) {
  auto s3 = build_catalog_group("S3");
  auto plan = fracture_plan(s3, Subgroup::trivial(s3), 2, 3, 6);
  ASSERT_EQ(plan.violations.size(), 1u);
  EXPECT_FALSE(plan.hypothesis_pass);
  OrbitPoset poset(s3);
  EXPECT_EQ(poset.label(plan.violations[0].upper), "G/C2");
  EXPECT_EQ(poset.label(plan.violations[0].lower), "G/C3");
  EXPECT_TRUE(plan.goodwillie_families_valid);
}

TEST(Fracture, BadIndices) {
  auto s3 = build_catalog_group("S3");
  auto e = Subgroup::trivial(s3);
  EXPECT_EQ(kind_of([&] { fracture_plan(s3, e, 2, 2, 3); }), ErrorKind::BadIndices);
  EXPECT_EQ(kind_of([&] { fracture_plan(s3, e, 1, 4, 3); }), ErrorKind::BadIndices);
  EXPECT_EQ(kind_of([&] { fracture_plan(s3, e, 1, 2, 7); }), ErrorKind::BadIndices);
}

TEST(Fracture, IntervalBookkeepingOverCatalog) {
  for (const char* name : {"S3", "D4", "C6", "C2xC2", "D6", "S4"}) {
    auto g = build_catalog_group(name);
    for (const auto& hc : g.lattice().classes()) {
      const std::size_t top = g.order() / hc.order();
      for (std::size_t n = 1; n <= top; ++n) {
        for (std::size_t m = 1; m <= n; ++m) {
          for (std::size_t k = 0; k < m; ++k) {
            auto plan = fracture_plan(g, hc.representative, k, m, n);
            EXPECT_TRUE(plan.goodwillie_families_valid);
            EXPECT_EQ(plan.hypothesis_pass, plan.violations.empty());
            OrbitPoset poset(g);
            for (const auto& v : plan.violations) EXPECT_FALSE(poset.comparable(v.upper, v.lower));
          }
        }
      }
    }
  }
}

TEST(Fracture, TikzSquare) {
  auto c2 = build_catalog_group("C2");
  auto plan = fracture_plan(c2, Subgroup::trivial(c2), 1, 2, 2);
  std::vector<std::string> corners;
  for (const auto& c : plan.corners) corners.push_back(c.equivariant_latex);
  EXPECT_EQ(tikzcd_square(corners),
            "\\begin{tikzcd}\nN_H^G \\arrow{r} \\arrow{d} & F((EC_{2})_{+}, N_H^G) \\arrow{d} \\\\\n"
            "\\widetilde{E}C_{2} \\wedge N_H^G \\arrow{r} & "
            "\\widetilde{E}C_{2} \\wedge F((EC_{2})_{+}, N_H^G)\n\\end{tikzcd}\n");
}

TEST(Cpk, Examples) {
  auto c2 = cpk_tower(2, 1);
  EXPECT_TRUE(c2.pass);
  EXPECT_EQ(c2.tower.jump_set, (std::vector<std::size_t>{1, 2}));

  auto c4 = cpk_tower(2, 2);
  EXPECT_TRUE(c4.pass);
  const auto& levels = c4.tower.levels;
  EXPECT_EQ(family_name(levels[1].family), "{e,C2}");
  EXPECT_EQ(family_name(levels[2].family), "{e}");
  EXPECT_EQ(family_name(levels[3].family), "{e}");
  EXPECT_TRUE(levels[4].family.empty());
}

TEST(Cpk, AllSmallPrimePowers) {
  for (std::size_t p : {2, 3, 5, 7, 11, 13, 31, 61}) {
    for (std::size_t k = 1, pk = p; pk <= 64; ++k, pk *= p) {
      auto r = cpk_tower(p, k);
      for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << p << "^" << k << ": " << c.name;
      EXPECT_TRUE(r.checks.back().pass);
    }
  }
}

TEST(Cpk, Errors) {
  EXPECT_EQ(kind_of([] { cpk_tower(4, 1); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { cpk_tower(2, 0); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { cpk_tower(2, 11); }), ErrorKind::OrderCapExceeded);
}

TEST(Gamma, SmallTables) {
  auto t1 = gamma_splitting(1);
  ASSERT_EQ(t1.rows.size(), 1u);
  EXPECT_EQ(t1.rows[0].prime, 1u);
  EXPECT_EQ(t1.rows[0].orbit_count, 1u);
  EXPECT_EQ(t1.rows[0].weyl_order, 1u);

  auto t2 = gamma_splitting(2);
  ASSERT_EQ(t2.rows.size(), 2u);
  EXPECT_EQ(t2.rows[0].prime, 1u);
  EXPECT_EQ(t2.rows[0].orbit_count, 2u);
  EXPECT_EQ(t2.rows[0].weyl_order, 2u);
  EXPECT_EQ(t2.rows[1].prime, 2u);
  EXPECT_EQ(t2.rows[1].orbit_count, 1u);
  EXPECT_EQ(t2.rows[1].weyl_order, 1u);

  auto t3 = gamma_splitting(3);
  ASSERT_EQ(t3.rows.size(), 3u);
  EXPECT_EQ(t3.rows[0].name, "e");
  EXPECT_EQ(t3.rows[1].name, "C2");
  EXPECT_EQ(t3.rows[2].name, "C3");
  EXPECT_TRUE(t3.pass);
}

TEST(Gamma, SylowRouteMatchesLattice) {
  for (std::size_t n = 1; n <= 6; ++n) {
    auto a = gamma_splitting(n);
    auto b = gamma_splitting_by_lattice(n);
    ASSERT_EQ(a.rows.size(), b.rows.size()) << n;
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      EXPECT_EQ(a.rows[i].representative, b.rows[i].representative);
      EXPECT_EQ(a.rows[i].prime, b.rows[i].prime);
      EXPECT_EQ(a.rows[i].orbit_count, b.rows[i].orbit_count);
      EXPECT_EQ(a.rows[i].weyl_order, b.rows[i].weyl_order);
    }
    EXPECT_TRUE(a.pass);
  }
}

TEST(Gamma, MatchesBruteForce) {
  // Subgroups from closures of element pairs, then joins until stable;
  // conjugacy, normalizers, orbits and double cosets all by direct search.
  for (std::size_t n = 1; n <= 4; ++n) {
    auto table = gamma_splitting(n);
    const auto& elems = table.group.elements();
    std::set<oracle::PermSet> subs;
    for (const Perm& a : elems) {
      for (const Perm& b : elems) subs.insert(oracle::closure({a, b}, n));
    }
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<oracle::PermSet> list(subs.begin(), subs.end());
      for (const auto& x : list) {
        for (const auto& y : list) {
          std::vector<Perm> gens(x.begin(), x.end());
          gens.insert(gens.end(), y.begin(), y.end());
          grew = subs.insert(oracle::closure(gens, n)).second || grew;
        }
      }
    }
    oracle::PermSet stab;
    for (const Perm& x : elems) {
      if (x(static_cast<Perm::Point>(n - 1)) == n - 1) stab.insert(x);
    }
    std::multiset<std::vector<std::size_t>> expected;
    for (const auto& cls : oracle::conjugacy_classes(subs, elems)) {
      const auto& k = *cls.begin();
      std::size_t order = k.size(), p = 1;
      if (order > 1) {
        p = 2;
        while (order % p) ++p;
        std::size_t rest = order;
        while (rest % p == 0) rest /= p;
        if (rest != 1) continue;
      }
      std::size_t normalizer = 0;
      for (const Perm& g : elems) normalizer += oracle::conjugate(k, g) == k;
      std::vector<Perm> gens(k.begin(), k.end());
      expected.insert({order, p, oracle::orbit_count(gens, n), normalizer / order,
                       oracle::double_cosets(elems, k, stab).size()});
    }
    std::multiset<std::vector<std::size_t>> got;
    for (const auto& r : table.rows) got.insert({r.order, r.prime, r.orbit_count, r.weyl_order, r.double_cosets});
    EXPECT_EQ(got, expected) << "n = " << n;
  }
}

TEST(Gamma, Errors) {
  EXPECT_EQ(kind_of([] { gamma_splitting(7); }), ErrorKind::GammaCapExceeded);
  EXPECT_EQ(kind_of([] { gamma_splitting(0); }), ErrorKind::BadIndices);
  Limits small;
  small.gamma_cap = 3;
  EXPECT_EQ(kind_of([&] { gamma_splitting(4, small); }), ErrorKind::GammaCapExceeded);
  EXPECT_EQ(kind_of([] { gamma_tower_descriptors(3, 4); }), ErrorKind::BadIndices);
  EXPECT_EQ(kind_of([] { gamma_tower_descriptors(3, 0); }), ErrorKind::BadIndices);
}

TEST(GammaTower, Examples) {
  auto top = gamma_tower_descriptors(3, 3);
  EXPECT_TRUE(top.family_k.empty());
  EXPECT_EQ(top.truncation, "Gamma^3");

  auto two = gamma_tower_descriptors(2, 1);
  EXPECT_EQ(family_name(two.family_k), "{e}");
  EXPECT_EQ(two.corners[0], "(~ES2 ^ G)^S2");
  EXPECT_EQ(two.corners[1], "(~ES2 ^ G)^S2");
  EXPECT_EQ(two.corners[2], "0");
  EXPECT_EQ(two.corners[3], "0");

  auto three = gamma_tower_descriptors(3, 2);
  EXPECT_EQ(family_name(three.family_k), "{e}");
  EXPECT_EQ(family_name(three.family_k_minus_1), "{e,C2}");
  EXPECT_EQ(three.corners[1], "(F((E{e,C2})_+, ~ES3 ^ G))^S3");
  EXPECT_EQ(three.corners[3], "(~E{e,C2} ^ F((E{e,C2})_+, ~ES3 ^ G))^S3");
}
