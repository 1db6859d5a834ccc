#include <gtest/gtest.h>

#include <random>

#include "normtower/gset.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace normtower;
using testing_support::pick;
using testing_support::random_gset;
using testing_support::shuffled;

namespace {

std::size_t class_index(const PermGroup& g, const char* gens) {
  return g.lattice().class_of(parse_subgroup(g, gens));
}

GSetIsoClass iso_of(const PermGroup& g, std::vector<std::pair<std::size_t, std::size_t>> terms) {
  GSetIsoClass out = zero_class(g);
  for (auto [c, m] : terms) out.multiplicity[c] = m;
  return out;
}

oracle::PermSet as_perm_set(const Subgroup& k) {
  oracle::PermSet out;
  for (ElemId e : k.elements()) out.insert(k.parent().element(e));
  return out;
}

// A 2-point set for a group of order 2, or any other size, swapped by the generator.
GSet swap_set(const PermGroup& c2) { return GSet::cosets(Subgroup::trivial(c2)); }

}  // namespace

TEST(GSet, ConstructionValidatesTheAction) {
  auto c2 = build_catalog_group("C2");
  auto swap = GSet::from_generator_images(c2, 4, {{1, 0, 2, 3}});
  EXPECT_EQ(swap.size(), 4u);
  EXPECT_EQ(swap.act(1, 0), 1u);
  EXPECT_THROW(GSet::from_generator_images(c2, 3, {{1, 2, 0}}), Error);  // order 3 image
  EXPECT_THROW(GSet::from_generator_images(c2, 2, {{0, 0}}), Error);
  EXPECT_THROW(GSet::from_table(c2, 2, {0, 1, 0, 0}), Error);
  auto s3 = build_catalog_group("S3");
  EXPECT_THROW(GSet::from_generator_images(s3, 2, {{1, 0}, {1, 0}}), Error);
  auto sign = GSet::from_generator_images(s3, 2, {{1, 0}, {0, 1}});
  EXPECT_EQ(orbit_partition(sign).size(), 1u);
}

TEST(GSet, OrbitExamples) {
  auto s3 = build_catalog_group("S3");
  EXPECT_EQ(orbits(GSet::regular(s3)).size(), 1u);
  EXPECT_EQ(orbits(GSet::trivial(s3, 4)).size(), 4u);
  auto c2 = build_catalog_group("C2");
  auto x = GSet::from_generator_images(c2, 4, {{1, 0, 2, 3}});
  auto parts = orbit_partition(x);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (std::vector<Point>{0, 1}));
  EXPECT_EQ(parts[2], (std::vector<Point>{3}));
}

TEST(GSet, CanonicalFormExamples) {
  auto s3 = build_catalog_group("S3");
  auto lat = s3.lattice();
  EXPECT_EQ(canonical_form(GSet::trivial(s3, 1)), iso_of(s3, {{lat.whole_class(), 1}}));
  EXPECT_EQ(canonical_form(GSet::regular(s3)), iso_of(s3, {{0, 1}}));
  EXPECT_EQ(canonical_form(GSet::empty(s3)), zero_class(s3));

  auto c2 = build_catalog_group("C2");
  auto coind = coinduce(GSet::trivial(Subgroup::trivial(c2).as_group(), 2), c2);
  EXPECT_EQ(coind.size(), 4u);
  EXPECT_EQ(canonical_form(coind), iso_of(c2, {{1, 2}, {0, 1}}));
  EXPECT_EQ(canonical_form(coind).to_string(), "2[G/C2] + [G/e]");
}

TEST(GSet, CombineExamples) {
  auto c2 = build_catalog_group("C2");
  auto free = swap_set(c2);
  auto u = combine(CombineKind::DisjointUnion, free, GSet::empty(c2));
  EXPECT_EQ(canonical_form(u), canonical_form(free));
  auto p = combine(CombineKind::Product, free, GSet::trivial(c2));
  EXPECT_EQ(canonical_form(p), canonical_form(free));
  auto ff = combine(CombineKind::Product, free, free);
  EXPECT_EQ(ff.size(), 4u);
  EXPECT_EQ(canonical_form(ff), iso_of(c2, {{0, 2}}));
  EXPECT_EQ(ff.label(1), "(()K,(1 2)K)");
  auto s3 = build_catalog_group("S3");
  try {
    combine(CombineKind::Product, free, GSet::trivial(s3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::GroupMismatch);
  }
}

TEST(GSet, RestrictExamples) {
  auto s3 = build_catalog_group("S3");
  auto x = GSet::cosets(parse_subgroup(s3, "(1 2)"));
  EXPECT_EQ(canonical_form(restrict(x, Subgroup::whole(s3))), canonical_form(x));
  auto c3 = parse_subgroup(s3, "(1 2 3)");
  auto r = restrict(x, c3);
  EXPECT_EQ(r.group().order(), 3u);
  EXPECT_EQ(canonical_form(r), iso_of(r.group(), {{0, 1}}));
  auto free = restrict(GSet::regular(s3), parse_subgroup(s3, "(1 2)"));
  EXPECT_EQ(canonical_form(free).multiplicity[0], 3u);
  auto other = build_catalog_group("C3");
  EXPECT_THROW(restrict(x, Subgroup::whole(other)), Error);
}

TEST(GSet, InduceExamples) {
  auto s3 = build_catalog_group("S3");
  auto x = GSet::cosets(parse_subgroup(s3, "(1 2)"));
  EXPECT_EQ(canonical_form(induce(x, s3)), canonical_form(x));

  auto c2 = build_catalog_group("C2");
  auto pt = GSet::trivial(Subgroup::trivial(c2).as_group(), 1);
  EXPECT_EQ(canonical_form(induce(pt, c2)), iso_of(c2, {{0, 1}}));

  auto k = parse_subgroup(s3, "(1 2)");
  auto ind = induce(GSet::trivial(k.as_group(), 1), s3);
  EXPECT_EQ(ind.size(), 3u);
  EXPECT_EQ(canonical_form(ind), iso_of(s3, {{class_index(s3, "(1 2)"), 1}}));
  EXPECT_THROW(induce(pt, build_catalog_group("C3xC3")), Error);  // degree 2 is not inside degree 6
}

TEST(GSet, CoinduceExamples) {
  auto s3 = build_catalog_group("S3");
  auto x = GSet::cosets(parse_subgroup(s3, "(1 2)"));
  auto same = coinduce(x, s3);
  EXPECT_EQ(canonical_form(same), canonical_form(x));

  // C2 from the trivial group of the same degree.
  auto c2 = build_catalog_group("C2");
  auto e = Subgroup::trivial(c2);
  auto x1 = GSet::trivial(e.as_group(), 1);
  auto x2 = GSet::trivial(e.as_group(), 1);
  auto both = combine(CombineKind::DisjointUnion, x1, x2);
  auto lhs = coinduce(both, c2);
  EXPECT_EQ(lhs.size(), 4u);
  GSetIsoClass rhs = canonical_form(coinduce(x1, c2));
  rhs += canonical_form(coinduce(x2, c2));
  rhs += canonical_form(induce(combine(CombineKind::Product, x1, x2), c2));
  EXPECT_EQ(canonical_form(lhs), rhs);

  Limits small;
  small.enumeration_cap = 100;
  auto c12 = build_catalog_group("C12");
  auto pts = GSet::trivial(Subgroup::trivial(c12).as_group(), 2);
  try {
    coinduce(pts, c12, small);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.kind(), ErrorKind::EnumerationCapExceeded);
    EXPECT_TRUE(err.is_cap_violation());
  }
  EXPECT_EQ(coinduce(GSet::empty(Subgroup::trivial(c12).as_group()), c12).size(), 0u);
  EXPECT_EQ(coinduce(GSet::empty(c12), c12).size(), 0u);
}

TEST(GSet, FixedPointExamples) {
  auto c2 = build_catalog_group("C2");
  auto coind = coinduce(GSet::trivial(Subgroup::trivial(c2).as_group(), 2), c2);
  EXPECT_EQ(fixed_points(coind, Subgroup::trivial(c2)).size(), 4u);
  EXPECT_EQ(coind.label(1), "fn:[0,1]");
  EXPECT_EQ(fixed_points(coind, Subgroup::whole(c2)), (std::vector<Point>{0, 3}));
  auto s3 = build_catalog_group("S3");
  EXPECT_TRUE(fixed_points(GSet::regular(s3), parse_subgroup(s3, "(1 2 3)")).empty());
}

TEST(GSet, CoinduceMatchesAllFunctionsOracle) {
  std::mt19937_64 rng(2024);
  for (const char* name : {"C2", "C3", "C4", "S3", "C2xC2", "D4", "C6"}) {
    auto g = build_catalog_group(name);
    auto subs = g.lattice().subgroups();
    for (int trial = 0; trial < 6; ++trial) {
      auto h = subs[pick(rng, subs.size())];
      auto x = random_gset(h.as_group(), rng, 2);
      // Brute force walks all |X|^|G| functions.
      if (coinduced_size(x.size(), g.order()) > 300'000) continue;
      auto got = coinduce(x, g);
      auto hset = as_perm_set(h);
      auto hx = h.as_group();
      auto expected = oracle::coinduce_all_functions(g.elements(), hset, x.size(), [&](const Perm& p, std::size_t v) {
        return static_cast<std::size_t>(x.act(*hx.find(p), static_cast<Point>(v)));
      });
      ASSERT_EQ(got.size(), expected.size()) << name;
      auto marks = mark_vector(got);
      auto lat = g.lattice();
      for (std::size_t c = 0; c < lat.class_count(); ++c) {
        EXPECT_EQ(marks[c], oracle::fixed_count(expected, as_perm_set(lat.class_info(c).representative)))
            << name << " class " << c;
      }
      EXPECT_EQ(got.size(), coinduced_size(x.size(), g.order() / h.order()));
    }
  }
}

TEST(GSet, IsoClassSoundness) {
  std::mt19937_64 rng(99);
  for (const char* name : {"C4", "S3", "C2xC2", "D4", "C6", "D5"}) {
    auto g = build_catalog_group(name);
    auto lat = g.lattice();
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_gset(g, rng, 3);
      // Half the time compare against a relabelled copy.
      auto b = trial % 2 ? shuffled(a, rng) : random_gset(g, rng, 3);
      if (a.size() != b.size()) b = shuffled(a, rng);
      const bool same_form = canonical_form(a) == canonical_form(b);
      const bool same_marks = mark_vector(a) == mark_vector(b);
      const bool iso = oracle::isomorphic_by_search(a, b);
      EXPECT_EQ(same_form, iso) << name;
      EXPECT_EQ(same_marks, iso) << name;
    }
    // Non-conjugate subgroups with equal orders give non-isomorphic orbits.
    for (std::size_t c = 0; c < lat.class_count(); ++c) {
      for (std::size_t d = 0; d < lat.class_count(); ++d) {
        auto a = GSet::cosets(lat.class_info(c).representative);
        auto b = GSet::cosets(lat.class_info(d).representative);
        EXPECT_EQ(oracle::isomorphic_by_search(a, b), c == d);
        EXPECT_EQ(canonical_form(a) == canonical_form(b), c == d);
      }
    }
  }
}

TEST(GSet, FrobeniusShadow) {
  // Res_K Ind_L^G X against the double coset decomposition
  // sum over g in K\G/L of Ind_{K cap gLg^-1}^K of the g-twisted restriction of X.
  std::mt19937_64 rng(5);
  for (const char* name : {"S3", "D4", "C2xC6", "S4", "D6"}) {
    auto g = build_catalog_group(name);
    auto subs = g.lattice().subgroups();
    for (int trial = 0; trial < 10; ++trial) {
      auto k = subs[pick(rng, subs.size())];
      auto l = subs[pick(rng, subs.size())];
      auto x = random_gset(l.as_group(), rng, 2);
      auto lhs = canonical_form(restrict(induce(x, g), k));
      GSetIsoClass rhs = zero_class(lhs.group);
      for (const auto& dc : double_cosets(g, k, l)) {
        auto target = k.intersect(l.conjugate(dc.representative));
        auto twisted = twisted_restrict(x, target, g.element(dc.representative));
        rhs += canonical_form(induce(twisted, k.as_group()));
      }
      EXPECT_EQ(lhs, rhs) << name;
    }
  }
}

TEST(GSet, SizeIdentities) {
  auto g = build_catalog_group("D4");
  for (const auto& h : g.lattice().subgroups()) {
    auto x = GSet::trivial(h.as_group(), 2);
    EXPECT_EQ(induce(x, g).size(), g.order() / h.order() * 2);
    EXPECT_EQ(coinduce(x, g).size(), coinduced_size(2, g.order() / h.order()));
  }
}

TEST(GSet, CorruptTableIsReported) {
  auto s3 = build_catalog_group("S3");
  auto regular = GSet::regular(s3);
  std::vector<Point> table;
  for (ElemId e = 0; e < s3.order(); ++e) {
    auto row = regular.row(e);
    table.insert(table.end(), row.begin(), row.end());
  }
  // Element 3 now fixes point 0.
  auto row3 = table.begin() + 3 * 6;
  std::iter_swap(row3, std::find(row3, row3 + 6, Point{0}));
  auto bad = GSet::unchecked(s3, 6, table);
  try {
    canonical_form(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MarkMismatch);
  }
}

TEST(GSet, StabilizersAndSubsets) {
  auto s3 = build_catalog_group("S3");
  auto x = GSet::cosets(parse_subgroup(s3, "(1 2)"));
  EXPECT_EQ(stabilizer(x, 0), parse_subgroup(s3, "(1 2)"));
  auto c3 = parse_subgroup(s3, "(1 2 3)");
  EXPECT_THROW(sub_gset(x, c3, {0, 1}), Error);
  auto all = sub_gset(x, c3, {2, 1, 0});
  EXPECT_EQ(all.size(), 3u);
  EXPECT_EQ(all.group().order(), 3u);
}
