#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "normtower/group.hpp"
#include "oracles.hpp"

using namespace normtower;

namespace {

const std::vector<std::string> kSmallCatalog = {
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C11", "C12",
    "D3", "D4", "D5", "D6", "S3", "C2xC2", "C2xC4", "C2xC2xC2", "C3xC3", "C2xC6", "C2xS3"};

oracle::PermSet as_perm_set(const Subgroup& k) {
  oracle::PermSet out;
  for (ElemId e : k.elements()) out.insert(k.parent().element(e));
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::BadIndices;
}

}  // namespace

TEST(Perm, ParsesCycleNotation) {
  Perm p = parse_cycles("(1 2 3)(4 5)", 5);
  EXPECT_EQ(p(0), 1);
  EXPECT_EQ(p(2), 0);
  EXPECT_EQ(p(3), 4);
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.cycles(), "(1 2 3)(4 5)");
  EXPECT_EQ(Perm::identity(3).cycles(), "()");
  EXPECT_EQ(parse_cycles("()", 3), Perm::identity(3));
}

TEST(Perm, CompositionActsRightToLeft) {
  Perm a = parse_cycles("(1 2)", 3);
  Perm b = parse_cycles("(2 3)", 3);
  // (a*b)(x) = a(b(x)): 2 -> 3 -> 3, 3 -> 2 -> 1
  Perm ab = a * b;
  EXPECT_EQ(ab(1), 2);
  EXPECT_EQ(ab(2), 0);
  EXPECT_TRUE((ab * ab.inverse()).is_identity());
}

TEST(Perm, RejectsMalformedInput) {
  for (const char* bad : {"(1 2", "(0 1)", "(1 1)", "(1 2)(2 3)", "(a)", "1 2", "(1 9)", ""}) {
    EXPECT_EQ(kind_of([&] { parse_cycles(bad, 4); }), ErrorKind::MalformedSpec) << bad;
  }
  EXPECT_EQ(kind_of([] { Perm({0, 0, 1}); }), ErrorKind::MalformedSpec);
}

TEST(Perm, ParsesGeneratorLists) {
  auto gens = parse_generators("(1 2 3), (1 2)", 0);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].degree(), 3u);
  EXPECT_EQ(format_generators(gens), "(1 2 3),(1 2)");
}

TEST(Group, CatalogOrders) {
  EXPECT_EQ(build_catalog_group("S3").order(), 6u);
  auto v4 = build_catalog_group("C2xC2");
  EXPECT_EQ(v4.order(), 4u);
  EXPECT_EQ(v4.degree(), 4u);
  EXPECT_EQ(build_catalog_group("D4").order(), 8u);
  EXPECT_EQ(build_catalog_group("C12").order(), 12u);
  EXPECT_EQ(build_catalog_group("S4").order(), 24u);
  EXPECT_EQ(build_catalog_group("C3xS3").order(), 18u);
  EXPECT_EQ(build_catalog_group("C1").order(), 1u);
}

TEST(Group, GeneratorSpec) {
  auto g = build_group({"", "(1 2 3 4 5)", 0});
  EXPECT_EQ(g.order(), 5u);
  EXPECT_EQ(g.degree(), 5u);
  EXPECT_EQ(g.id(), "perm5:(1 2 3 4 5)");
  auto s3 = build_group({"", "(1 2 3),(1 2)", 0});
  EXPECT_TRUE(s3.same_as(build_catalog_group("S3")));
}

TEST(Group, MalformedSpecs) {
  EXPECT_EQ(kind_of([] { build_catalog_group("Q8"); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { build_catalog_group("D2"); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { build_catalog_group("C"); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { build_catalog_group("C2x"); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { build_group({}); }), ErrorKind::MalformedSpec);
  EXPECT_EQ(kind_of([] { build_group({"", "(1 2 3)", 2}); }), ErrorKind::MalformedSpec);
}

TEST(Group, OrderCaps) {
  EXPECT_EQ(kind_of([] { build_catalog_group("S7"); }), ErrorKind::OrderCapExceeded);
  Limits big;
  big.group_order_cap = 5040;
  EXPECT_EQ(build_catalog_group("S7", big).order(), 5040u);

  Limits small;
  small.subgroup_enum_cap = 10;
  auto s4 = build_catalog_group("S4");
  EXPECT_EQ(kind_of([&] { s4.lattice(small); }), ErrorKind::OrderCapExceeded);
  EXPECT_TRUE(kind_of([&] { s4.lattice(small); }) == ErrorKind::OrderCapExceeded);
  try {
    s4.lattice(small);
  } catch (const Error& e) {
    EXPECT_TRUE(e.is_cap_violation());
  }
}

TEST(Group, ElementTableInvariants) {
  for (const auto& name : {"S3", "D5", "C2xC6", "S4"}) {
    auto g = build_catalog_group(name);
    EXPECT_TRUE(g.element(PermGroup::identity()).is_identity());
    for (ElemId a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, g.inv(a)), PermGroup::identity());
      for (ElemId b = 0; b < g.order(); b += 3) {
        EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
      }
    }
  }
}

TEST(Subgroups, KnownCounts) {
  EXPECT_EQ(enumerate_subgroups(build_catalog_group("S3")).size(), 6u);
  EXPECT_EQ(enumerate_subgroups(build_catalog_group("C5")).size(), 2u);
  EXPECT_EQ(enumerate_subgroups(build_catalog_group("C2xC2")).size(), 5u);
  EXPECT_EQ(enumerate_subgroups(build_catalog_group("D4")).size(), 10u);
  EXPECT_EQ(enumerate_subgroups(build_catalog_group("S4")).size(), 30u);
  EXPECT_EQ(subgroup_classes(build_catalog_group("S4")).size(), 11u);
  EXPECT_EQ(subgroup_classes(build_catalog_group("D4")).size(), 8u);
}

TEST(Subgroups, SymmetricGroupOnThreeLetters) {
  auto s3 = build_catalog_group("S3");
  auto classes = subgroup_classes(s3);
  ASSERT_EQ(classes.size(), 4u);
  std::vector<std::size_t> sizes, orders;
  std::vector<std::string> names;
  for (const auto& c : classes) {
    sizes.push_back(c.class_size);
    orders.push_back(c.order());
    names.push_back(c.name);
  }
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 3, 1, 1}));
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 2, 3, 6}));
  EXPECT_EQ(names, (std::vector<std::string>{"e", "C2", "C3", "S3"}));
  EXPECT_EQ(classes[0].display(), "K0:e");
}

TEST(Subgroups, AbelianClassesAreSingletons) {
  auto classes = subgroup_classes(build_catalog_group("C2xC2"));
  EXPECT_EQ(classes.size(), 5u);
  for (const auto& c : classes) EXPECT_EQ(c.class_size, 1u);
  EXPECT_EQ(classes.back().name, "C2xC2");
}

TEST(Subgroups, StructureNames) {
  auto name_of_whole = [](const char* g) {
    auto grp = build_catalog_group(g);
    return structure_name(Subgroup::whole(grp));
  };
  EXPECT_EQ(name_of_whole("C2xC4"), "C2xC4");
  EXPECT_EQ(name_of_whole("C2xC6"), "C2xC6");
  EXPECT_EQ(name_of_whole("C3xC3"), "C3xC3");
  EXPECT_EQ(name_of_whole("C2xC3"), "C6");
  EXPECT_EQ(name_of_whole("D4"), "D4");
  EXPECT_EQ(name_of_whole("D6"), "D6");
  EXPECT_EQ(name_of_whole("S4"), "S4");
  auto s4 = build_catalog_group("S4");
  auto a4 = parse_subgroup(s4, "(1 2 3),(2 3 4)");
  EXPECT_EQ(a4.order(), 12u);
  EXPECT_EQ(structure_name(a4), "A4");
}

TEST(Subgroups, MatchSubsetClosureOracle) {
  for (const auto& name : kSmallCatalog) {
    auto g = build_catalog_group(name);
    auto expected = oracle::all_subgroups_by_subsets(g.elements());
    std::set<oracle::PermSet> got;
    for (const auto& k : enumerate_subgroups(g)) got.insert(as_perm_set(k));
    EXPECT_EQ(got, expected) << name;

    auto lat = g.lattice();
    auto oracle_classes = oracle::conjugacy_classes(expected, g.elements());
    EXPECT_EQ(lat.class_count(), oracle_classes.size()) << name;
    std::multiset<std::pair<std::size_t, std::size_t>> a, b;
    for (const auto& c : lat.classes()) a.insert({c.order(), c.class_size});
    for (const auto& c : oracle_classes) b.insert({c.begin()->size(), c.size()});
    EXPECT_EQ(a, b) << name;
  }
}

TEST(Subgroups, LatticeOrderingAndLookup) {
  for (const auto& name : {"S3", "D4", "C2xC6", "S4"}) {
    auto g = build_catalog_group(name);
    auto lat = g.lattice();
    EXPECT_EQ(lat.class_info(lat.trivial_class()).order(), 1u);
    EXPECT_EQ(lat.class_info(lat.whole_class()).order(), g.order());
    for (std::size_t i = 0; i + 1 < lat.subgroup_count(); ++i) {
      EXPECT_TRUE(lat.subgroup(i) < lat.subgroup(i + 1));
    }
    for (std::size_t i = 0; i < lat.subgroup_count(); ++i) {
      auto k = lat.subgroup(i);
      EXPECT_EQ(lat.find(k), i);
      EXPECT_EQ(g.order() % k.order(), 0u);
      // Every conjugate lands in the same class.
      for (ElemId x = 0; x < g.order(); x += 5) EXPECT_EQ(lat.class_of(k.conjugate(x)), lat.class_of_subgroup(i));
      // Regenerating from the greedy generators reproduces the subgroup.
      EXPECT_EQ(Subgroup::generated_by(g, k.generators()), k);
    }
  }
}

TEST(Subgroups, MarksAgreeWithDirectFixedPointCounts) {
  for (const auto& name : {"S3", "D4", "C2xC2", "D6"}) {
    auto g = build_catalog_group(name);
    auto lat = g.lattice();
    for (std::size_t b = 0; b < lat.class_count(); ++b) {
      auto kb = lat.class_info(b).representative;
      auto cosets = left_cosets(kb);
      for (std::size_t a = 0; a < lat.class_count(); ++a) {
        auto ka = lat.class_info(a).representative;
        std::size_t fixed = 0;
        for (ElemId r : cosets.reps) {
          bool all = std::all_of(ka.elements().begin(), ka.elements().end(), [&](ElemId s) {
            return cosets.coset_of[g.mul(s, r)] == cosets.coset_of[r];
          });
          fixed += all;
        }
        EXPECT_EQ(lat.mark(a, b), fixed) << name << " " << a << " " << b;
        EXPECT_EQ(lat.subconjugate(a, b), fixed > 0);
      }
    }
  }
}

TEST(Subgroups, ParseSubgroupForms) {
  auto s3 = build_catalog_group("S3");
  EXPECT_EQ(parse_subgroup(s3, "e").order(), 1u);
  EXPECT_EQ(parse_subgroup(s3, " G ").order(), 6u);
  EXPECT_EQ(parse_subgroup(s3, "(1 2)").order(), 2u);
  EXPECT_EQ(kind_of([&] { parse_subgroup(s3, "(1 2 3 4)"); }), ErrorKind::MalformedSpec);
  auto c6 = build_catalog_group("C6");
  EXPECT_EQ(kind_of([&] { parse_subgroup(c6, "(1 2)"); }), ErrorKind::SubgroupMismatch);
  EXPECT_EQ(kind_of([&] { Subgroup::from_elements(s3, {0, 1, 2}); }), ErrorKind::SubgroupMismatch);
}

TEST(DoubleCosets, SymmetricGroupExample) {
  auto s3 = build_catalog_group("S3");
  auto k = parse_subgroup(s3, "(1 2)");
  auto dc = double_cosets(s3, k, k);
  std::vector<std::size_t> sizes;
  for (const auto& d : dc) sizes.push_back(d.size);
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(dc.front().representative, PermGroup::identity());
}

TEST(DoubleCosets, RejectForeignSubgroups) {
  auto s3 = build_catalog_group("S3");
  auto c3 = build_catalog_group("C3");
  EXPECT_EQ(kind_of([&] { double_cosets(s3, Subgroup::whole(c3), Subgroup::trivial(s3)); }),
            ErrorKind::SubgroupMismatch);
}

TEST(DoubleCosets, MatchPartitionOracle) {
  std::mt19937_64 rng(7);
  for (const auto& name : kSmallCatalog) {
    auto g = build_catalog_group(name);
    auto subs = enumerate_subgroups(g);
    for (int trial = 0; trial < 12; ++trial) {
      const auto& k = subs[rng() % subs.size()];
      const auto& h = subs[rng() % subs.size()];
      auto dc = double_cosets(g, k, h);
      auto expected = oracle::double_cosets(g.elements(), as_perm_set(k), as_perm_set(h));
      ASSERT_EQ(dc.size(), expected.size()) << name;
      std::size_t total = 0;
      for (std::size_t i = 0; i < dc.size(); ++i) {
        // Oracle cosets are listed in order of their minimal element too.
        EXPECT_EQ(g.element(dc[i].representative), *expected[i].begin());
        EXPECT_EQ(dc[i].size, expected[i].size());
        auto twisted = k.intersect(h.conjugate(dc[i].representative));
        EXPECT_EQ(dc[i].size, k.order() * h.order() / twisted.order());
        total += dc[i].size;
      }
      EXPECT_EQ(total, g.order());
      EXPECT_EQ(double_cosets(g, h, k).size(), dc.size());
    }
  }
}

TEST(DoubleCosets, InvariantUnderConjugation) {
  auto g = build_catalog_group("S4");
  auto subs = enumerate_subgroups(g);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& k = subs[rng() % subs.size()];
    const auto& h = subs[rng() % subs.size()];
    ElemId x = static_cast<ElemId>(rng() % g.order());
    ElemId y = static_cast<ElemId>(rng() % g.order());
    EXPECT_EQ(double_cosets(g, k, h).size(), double_cosets(g, k.conjugate(x), h.conjugate(y)).size());
  }
}

TEST(Normalizers, WeylGroupOrders) {
  auto s3 = build_catalog_group("S3");
  EXPECT_EQ(normalizer_quotient_order(s3, parse_subgroup(s3, "(1 2 3)")), 2u);
  EXPECT_EQ(normalizer_quotient_order(s3, parse_subgroup(s3, "(1 2)")), 1u);
  EXPECT_EQ(normalizer_quotient_order(s3, Subgroup::trivial(s3)), 6u);
  EXPECT_EQ(normalizer_quotient_order(s3, Subgroup::whole(s3)), 1u);
  auto s4 = build_catalog_group("S4");
  EXPECT_EQ(normalizer_quotient_order(s4, Subgroup::trivial(s4)), 24u);
  EXPECT_EQ(normalizer_quotient_order(s4, parse_subgroup(s4, "(1 2)(3 4),(1 3)(2 4)")), 6u);
  auto c2 = build_catalog_group("S2");
  EXPECT_EQ(normalizer_quotient_order(c2, Subgroup::whole(c2)), 1u);
}

TEST(Cosets, LeftAndRightTables) {
  auto s3 = build_catalog_group("S3");
  auto k = parse_subgroup(s3, "(1 2)");
  auto left = left_cosets(k);
  auto right = right_cosets(k);
  EXPECT_EQ(left.reps.size(), 3u);
  EXPECT_EQ(right.reps.size(), 3u);
  for (ElemId x = 0; x < s3.order(); ++x) {
    for (ElemId s : k.elements()) {
      EXPECT_EQ(left.coset_of[s3.mul(x, s)], left.coset_of[x]);
      EXPECT_EQ(right.coset_of[s3.mul(s, x)], right.coset_of[x]);
    }
  }
}
