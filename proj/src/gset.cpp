#include "normtower/gset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace normtower {

struct GSetAccess {
  static GSet make(PermGroup g, std::size_t size, std::vector<Point> table, Labeler labels) {
    return GSet(std::move(g), size, std::make_shared<const std::vector<Point>>(std::move(table)),
                std::move(labels));
  }
};

namespace {

constexpr Point kNoPoint = std::numeric_limits<Point>::max();

// Lattice instance of k when the parent lattice is cheap to reach, so that
// repeated restrictions share one as_group() and one lattice.
Subgroup shared_instance(const Subgroup& k) {
  if (k.parent().order() > Limits{}.subgroup_enum_cap) return k;
  return k.parent().lattice().canonical(k);
}

bool is_permutation(std::span<const Point> row) {
  std::vector<char> seen(row.size(), 0);
  for (Point p : row) {
    if (p >= row.size() || seen[p]) return false;
    seen[p] = 1;
  }
  return true;
}

// Fills every row from the generator rows: act(e * s) = act(e) o act(s).
std::vector<Point> table_from_generators(const PermGroup& g, std::size_t n,
                                         const std::vector<std::vector<Point>>& gen_rows) {
  const auto& gens = g.generator_ids();
  std::vector<Point> table(g.order() * n);
  std::vector<char> done(g.order(), 0);
  std::iota(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(n), Point{0});
  done[0] = 1;
  std::vector<ElemId> queue{0};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const ElemId e = queue[qi];
    for (std::size_t s = 0; s < gens.size(); ++s) {
      const ElemId es = g.mul(e, gens[s]);
      if (done[es]) continue;
      done[es] = 1;
      queue.push_back(es);
      const Point* src = table.data() + static_cast<std::size_t>(e) * n;
      Point* dst = table.data() + static_cast<std::size_t>(es) * n;
      const auto& srow = gen_rows[s];
      for (std::size_t p = 0; p < n; ++p) dst[p] = src[srow[p]];
    }
  }
  return table;
}

bool table_is_action(const PermGroup& g, std::size_t n, const std::vector<Point>& table) {
  if (table.size() != g.order() * n) return false;
  for (ElemId e = 0; e < g.order(); ++e) {
    if (!is_permutation({table.data() + static_cast<std::size_t>(e) * n, n})) return false;
  }
  for (std::size_t p = 0; p < n; ++p) {
    if (table[p] != p) return false;
  }
  for (ElemId e = 0; e < g.order(); ++e) {
    const Point* re = table.data() + static_cast<std::size_t>(e) * n;
    for (ElemId s : g.generator_ids()) {
      const Point* rs = table.data() + static_cast<std::size_t>(s) * n;
      const Point* res = table.data() + static_cast<std::size_t>(g.mul(e, s)) * n;
      for (std::size_t p = 0; p < n; ++p) {
        if (res[p] != re[rs[p]]) return false;
      }
    }
  }
  return true;
}

Labeler default_labels() {
  return [](Point p) { return std::to_string(p); };
}

void require_same_group(const PermGroup& a, const PermGroup& b) {
  if (!a.same_as(b)) {
    throw Error(ErrorKind::GroupMismatch, "G-sets over " + a.id() + " and " + b.id());
  }
}

}  // namespace

// Construction ---------------------------------------------------------------

GSet GSet::from_generator_images(const PermGroup& g, std::size_t size,
                                 const std::vector<std::vector<Point>>& images, Labeler labels) {
  if (images.size() != g.generators().size()) {
    throw Error(ErrorKind::MalformedSpec, "expected one image list per generator of " + g.id());
  }
  for (const auto& img : images) {
    if (img.size() != size || !is_permutation(img)) {
      throw Error(ErrorKind::MalformedSpec, "generator image is not a permutation of the points");
    }
  }
  std::vector<std::vector<Point>> gen_rows;
  for (ElemId s : g.generator_ids()) {
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      if (g.generators()[i] == g.element(s)) {
        gen_rows.push_back(images[i]);
        break;
      }
    }
  }
  auto table = table_from_generators(g, size, gen_rows);
  if (!table_is_action(g, size, table)) {
    throw Error(ErrorKind::MalformedSpec, "generator images do not satisfy the group's relations");
  }
  // Repeated or identity generators must agree with the table as well.
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const ElemId s = g.index_of(g.generators()[i]);
    if (!std::equal(images[i].begin(), images[i].end(), table.begin() + static_cast<std::ptrdiff_t>(s * size))) {
      throw Error(ErrorKind::MalformedSpec, "generator images do not satisfy the group's relations");
    }
  }
  return GSetAccess::make(g, size, std::move(table), labels ? std::move(labels) : default_labels());
}

GSet GSet::from_table(const PermGroup& g, std::size_t size, std::vector<Point> table, Labeler labels) {
  if (!table_is_action(g, size, table)) {
    throw Error(ErrorKind::MalformedSpec, "table is not a left action of " + g.id());
  }
  return GSetAccess::make(g, size, std::move(table), labels ? std::move(labels) : default_labels());
}

GSet GSet::unchecked(const PermGroup& g, std::size_t size, std::vector<Point> table, Labeler labels) {
  return GSetAccess::make(g, size, std::move(table), labels ? std::move(labels) : default_labels());
}

GSet GSet::empty(const PermGroup& g) { return GSetAccess::make(g, 0, {}, default_labels()); }

GSet GSet::trivial(const PermGroup& g, std::size_t n) {
  std::vector<Point> table(g.order() * n);
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = static_cast<Point>(i % n);
  return GSetAccess::make(g, n, std::move(table), default_labels());
}

GSet GSet::cosets(const Subgroup& k) {
  const PermGroup& g = k.parent();
  CosetTable ct = left_cosets(k);
  const std::size_t n = ct.reps.size();
  std::vector<Point> table(g.order() * n);
  for (ElemId e = 0; e < g.order(); ++e) {
    for (std::size_t i = 0; i < n; ++i) {
      table[e * n + i] = static_cast<Point>(ct.coset_of[g.mul(e, ct.reps[i])]);
    }
  }
  Labeler labels = [g, reps = ct.reps](Point p) { return g.element(reps[p]).cycles() + "K"; };
  return GSetAccess::make(g, n, std::move(table), std::move(labels));
}

GSet GSet::regular(const PermGroup& g) {
  const std::size_t n = g.order();
  std::vector<Point> table(n * n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) table[a * n + b] = g.mul(a, b);
  }
  Labeler labels = [g](Point p) { return g.element(p).cycles(); };
  return GSetAccess::make(g, n, std::move(table), std::move(labels));
}

std::string GSet::label(Point x) const { return labels_ ? labels_(x) : std::to_string(x); }

// Iso classes ----------------------------------------------------------------

std::size_t GSetIsoClass::orbit_count() const {
  return std::accumulate(multiplicity.begin(), multiplicity.end(), std::size_t{0});
}

std::size_t GSetIsoClass::point_count() const {
  auto lat = group.lattice();
  std::size_t total = 0;
  for (std::size_t c = 0; c < multiplicity.size(); ++c) {
    total += multiplicity[c] * (group.order() / lat.class_info(c).order());
  }
  return total;
}

std::vector<std::size_t> GSetIsoClass::marks() const {
  auto lat = group.lattice();
  std::vector<std::size_t> out(multiplicity.size(), 0);
  for (std::size_t a = 0; a < out.size(); ++a) {
    for (std::size_t b = 0; b < out.size(); ++b) out[a] += multiplicity[b] * lat.mark(a, b);
  }
  return out;
}

bool GSetIsoClass::operator==(const GSetIsoClass& other) const {
  return group.same_as(other.group) && multiplicity == other.multiplicity;
}

GSetIsoClass& GSetIsoClass::operator+=(const GSetIsoClass& other) {
  require_same_group(group, other.group);
  for (std::size_t c = 0; c < multiplicity.size(); ++c) multiplicity[c] += other.multiplicity[c];
  return *this;
}

std::string GSetIsoClass::to_string() const {
  auto lat = group.lattice();
  std::string out;
  for (std::size_t c = multiplicity.size(); c-- > 0;) {
    if (multiplicity[c] == 0) continue;
    if (!out.empty()) out += " + ";
    if (multiplicity[c] > 1) out += std::to_string(multiplicity[c]);
    out += "[G/" + lat.class_label(c) + "]";
  }
  return out.empty() ? "0" : out;
}

GSetIsoClass zero_class(const PermGroup& g) {
  return GSetIsoClass{g, std::vector<std::size_t>(g.lattice().class_count(), 0)};
}

// Orbits and forms -------------------------------------------------------------

std::vector<std::vector<Point>> orbit_partition(const GSet& x) {
  const auto& gens = x.group().generator_ids();
  std::vector<char> seen(x.size(), 0);
  std::vector<std::vector<Point>> out;
  for (Point start = 0; start < x.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElemId s : gens) {
        Point y = x.act(s, orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<GSet> orbits(const GSet& x) {
  std::vector<GSet> out;
  const Subgroup whole = Subgroup::whole(x.group());
  for (const auto& orbit : orbit_partition(x)) out.push_back(sub_gset(x, whole, orbit));
  return out;
}

Subgroup stabilizer(const GSet& x, Point p) {
  std::vector<ElemId> elems;
  for (ElemId e = 0; e < x.group().order(); ++e) {
    if (x.act(e, p) == p) elems.push_back(e);
  }
  return Subgroup::from_elements(x.group(), std::move(elems));
}

std::vector<std::size_t> mark_vector(const GSet& x, const Limits& limits) {
  auto lat = x.group().lattice(limits);
  std::vector<std::size_t> out(lat.class_count(), 0);
  std::vector<unsigned char> fixed(x.size());
  for (std::size_t c = 0; c < lat.class_count(); ++c) {
    std::fill(fixed.begin(), fixed.end(), 1);
    for (ElemId s : lat.class_info(c).representative.generators()) {
      const auto row = x.row(s);
      for (std::size_t p = 0; p < fixed.size(); ++p) fixed[p] &= static_cast<unsigned char>(row[p] == p);
    }
    out[c] = static_cast<std::size_t>(std::count(fixed.begin(), fixed.end(), 1));
  }
  return out;
}

GSetIsoClass canonical_form(const GSet& x, const Limits& limits) {
  const PermGroup& g = x.group();
  auto lat = g.lattice(limits);
  GSetIsoClass iso = zero_class(g);
  const auto& gens = g.generator_ids();
  const std::size_t order = g.order();
  std::vector<char> seen(x.size(), 0);
  std::vector<Point> orbit;
  std::vector<std::uint64_t> stab((order + 63) / 64);
  for (Point start = 0; start < x.size(); ++start) {
    if (seen[start]) continue;
    orbit.assign(1, start);
    seen[start] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (ElemId s : gens) {
        const Point y = x.act(s, orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    }
    std::fill(stab.begin(), stab.end(), 0);
    std::size_t stab_order = 0;
    for (ElemId e = 0; e < order; ++e) {
      if (x.act(e, start) == start) {
        stab[e / 64] |= std::uint64_t{1} << (e % 64);
        ++stab_order;
      }
    }
    const auto index = lat.find_bits(stab);
    if (!index) {
      throw Error(ErrorKind::MarkMismatch, "stabilizer of point " + x.label(start) +
                                               " is not a subgroup; the action table is corrupt");
    }
    if (stab_order * orbit.size() != order) {
      throw Error(ErrorKind::MarkMismatch, "orbit of " + x.label(start) + " has size " +
                                               std::to_string(orbit.size()) + " but its stabilizer has order " +
                                               std::to_string(stab_order));
    }
    ++iso.multiplicity[lat.class_of_subgroup(*index)];
  }
  const auto direct = mark_vector(x, limits);
  const auto expected = iso.marks();
  for (std::size_t c = 0; c < direct.size(); ++c) {
    if (direct[c] != expected[c]) {
      throw Error(ErrorKind::MarkMismatch,
                  "|X^K| for K = " + lat.class_label(c) + " counted " + std::to_string(direct[c]) +
                      " but the orbit decomposition predicts " + std::to_string(expected[c]));
    }
  }
  return iso;
}

// Functors ---------------------------------------------------------------------

GSet combine(CombineKind kind, const GSet& a, const GSet& b) {
  require_same_group(a.group(), b.group());
  const PermGroup& g = a.group();
  const std::size_t na = a.size(), nb = b.size();
  if (kind == CombineKind::DisjointUnion) {
    const std::size_t n = na + nb;
    std::vector<Point> table(g.order() * n);
    for (ElemId e = 0; e < g.order(); ++e) {
      Point* dst = table.data() + static_cast<std::size_t>(e) * n;
      auto ra = a.row(e);
      auto rb = b.row(e);
      std::copy(ra.begin(), ra.end(), dst);
      for (std::size_t p = 0; p < nb; ++p) dst[na + p] = static_cast<Point>(na + rb[p]);
    }
    Labeler labels = [a, b, na](Point p) { return p < na ? a.label(p) : b.label(static_cast<Point>(p - na)); };
    return GSetAccess::make(g, n, std::move(table), std::move(labels));
  }
  const std::size_t n = na * nb;
  std::vector<Point> table(g.order() * n);
  for (ElemId e = 0; e < g.order(); ++e) {
    Point* dst = table.data() + static_cast<std::size_t>(e) * n;
    auto ra = a.row(e);
    auto rb = b.row(e);
    for (std::size_t p = 0; p < na; ++p) {
      for (std::size_t q = 0; q < nb; ++q) dst[p * nb + q] = static_cast<Point>(ra[p] * nb + rb[q]);
    }
  }
  Labeler labels = [a, b, nb](Point p) {
    return "(" + a.label(static_cast<Point>(p / nb)) + "," + b.label(static_cast<Point>(p % nb)) + ")";
  };
  return GSetAccess::make(g, n, std::move(table), std::move(labels));
}

GSet disjoint_union(const std::vector<GSet>& parts, const PermGroup& g) {
  GSet out = GSet::empty(g);
  for (const auto& part : parts) out = combine(CombineKind::DisjointUnion, out, part);
  return out;
}

GSet twisted_restrict(const GSet& x, const Subgroup& target, const Perm& g) {
  const Subgroup t = shared_instance(target);
  const PermGroup& parent = t.parent();
  const Perm g_inv = g.inverse();
  const std::size_t n = x.size();
  std::vector<Point> table(t.order() * n);
  for (std::size_t i = 0; i < t.order(); ++i) {
    const Perm twisted = g_inv * parent.element(t.elements()[i]) * g;
    auto h = twisted.degree() == x.group().degree() ? x.group().find(twisted) : std::nullopt;
    if (!h) {
      throw Error(ErrorKind::SubgroupMismatch,
                  "conjugated element " + twisted.cycles() + " is not in " + x.group().id());
    }
    auto row = x.row(*h);
    std::copy(row.begin(), row.end(), table.begin() + static_cast<std::ptrdiff_t>(i * n));
  }
  return GSetAccess::make(t.as_group(), n, std::move(table), [x](Point p) { return x.label(p); });
}

GSet restrict(const GSet& x, const Subgroup& k) {
  if (!k.parent().same_as(x.group())) {
    throw Error(ErrorKind::SubgroupMismatch, "restriction to a subgroup of a different group");
  }
  return twisted_restrict(x, k, Perm::identity(x.group().degree()));
}

GSet induce(const GSet& x, const PermGroup& g) {
  const Subgroup k = shared_instance(Subgroup::of(g, x.group()));
  const CosetTable ct = left_cosets(k);
  const std::size_t m = ct.reps.size();
  const std::size_t nx = x.size();
  const std::size_t n = m * nx;
  std::vector<std::vector<Point>> gen_rows;
  for (ElemId s : g.generator_ids()) {
    std::vector<Point> row(n);
    for (std::size_t i = 0; i < m; ++i) {
      const ElemId sc = g.mul(s, ct.reps[i]);
      const std::size_t j = ct.coset_of[sc];
      // s c_i = c_j k with k in K
      const ElemId kk = g.mul(g.inv(ct.reps[j]), sc);
      const ElemId kx = x.group().index_of(g.element(kk));
      for (std::size_t p = 0; p < nx; ++p) row[i * nx + p] = static_cast<Point>(j * nx + x.act(kx, static_cast<Point>(p)));
    }
    gen_rows.push_back(std::move(row));
  }
  auto table = table_from_generators(g, n, gen_rows);
  Labeler labels = [g, x, reps = ct.reps, nx](Point p) {
    return "(" + g.element(reps[p / nx]).cycles() + "," + x.label(static_cast<Point>(p % nx)) + ")";
  };
  return GSetAccess::make(g, n, std::move(table), std::move(labels));
}

std::size_t coinduced_size(std::size_t x_size, std::size_t index) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < index; ++i) {
    if (x_size != 0 && total > std::numeric_limits<std::size_t>::max() / x_size) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= x_size;
  }
  return total;
}

GSet coinduce(const GSet& x, const PermGroup& g, const Limits& limits) {
  const Subgroup h = shared_instance(Subgroup::of(g, x.group()));
  const CosetTable rc = right_cosets(h);
  const std::size_t m = rc.reps.size();
  const std::size_t s = x.size();
  const std::size_t n = coinduced_size(s, m);
  if (n > limits.enumeration_cap) {
    throw Error(ErrorKind::EnumerationCapExceeded,
                "Coind from " + x.group().id() + " to " + g.id() + " of a " + std::to_string(s) +
                    "-point set has " + std::to_string(s) + "^" + std::to_string(m) +
                    " points, above the cap of " + std::to_string(limits.enumeration_cap));
  }
  std::vector<std::size_t> weight(m, 1);
  for (std::size_t i = m; i-- > 1;) weight[i - 1] = weight[i] * s;

  std::vector<std::vector<Point>> gen_rows;
  std::vector<std::size_t> digits(m, 0);
  for (ElemId gen : g.generator_ids()) {
    // (gen f)(r_i) = f(r_i gen) = h_i . f(r_j) where r_i gen = h_i r_j.
    std::vector<std::size_t> source(m);
    std::vector<ElemId> twist(m);
    for (std::size_t i = 0; i < m; ++i) {
      const ElemId rg = g.mul(rc.reps[i], gen);
      const std::size_t j = rc.coset_of[rg];
      source[i] = j;
      twist[i] = x.group().index_of(g.element(g.mul(rg, g.inv(rc.reps[j]))));
    }
    std::vector<Point> row(n);
    std::fill(digits.begin(), digits.end(), 0);
    for (std::size_t code = 0; code < n; ++code) {
      std::size_t image = 0;
      for (std::size_t i = 0; i < m; ++i) {
        image += weight[i] * x.act(twist[i], static_cast<Point>(digits[source[i]]));
      }
      row[code] = static_cast<Point>(image);
      for (std::size_t i = m; i-- > 0;) {
        if (++digits[i] < s) break;
        digits[i] = 0;
      }
    }
    gen_rows.push_back(std::move(row));
  }
  auto table = table_from_generators(g, n, gen_rows);
  Labeler labels = [x, weight, s](Point p) {
    std::string out = "fn:[";
    for (std::size_t i = 0; i < weight.size(); ++i) {
      if (i) out += ',';
      out += x.label(static_cast<Point>(p / weight[i] % s));
    }
    return out + "]";
  };
  return GSetAccess::make(g, n, std::move(table), std::move(labels));
}

std::vector<Point> fixed_points(const GSet& x, const Subgroup& k) {
  if (!k.parent().same_as(x.group())) {
    throw Error(ErrorKind::SubgroupMismatch, "fixed points of a subgroup of a different group");
  }
  const auto& gens = k.generators();
  std::vector<Point> out;
  for (Point p = 0; p < x.size(); ++p) {
    if (std::all_of(gens.begin(), gens.end(), [&](ElemId s) { return x.act(s, p) == p; })) out.push_back(p);
  }
  return out;
}

GSet sub_gset(const GSet& x, const Subgroup& k, const std::vector<Point>& points) {
  if (!k.parent().same_as(x.group())) {
    throw Error(ErrorKind::SubgroupMismatch, "sub-G-set over a subgroup of a different group");
  }
  const Subgroup kk = shared_instance(k);
  std::vector<Point> renumber(x.size(), kNoPoint);
  for (std::size_t i = 0; i < points.size(); ++i) renumber[points[i]] = static_cast<Point>(i);
  const std::size_t n = points.size();
  std::vector<Point> table(kk.order() * n);
  for (std::size_t e = 0; e < kk.order(); ++e) {
    auto row = x.row(kk.elements()[e]);
    for (std::size_t i = 0; i < n; ++i) {
      const Point y = renumber[row[points[i]]];
      if (y == kNoPoint) throw Error(ErrorKind::SubgroupMismatch, "point subset is not stable under the subgroup");
      table[e * n + i] = y;
    }
  }
  Labeler labels = [x, points](Point p) { return x.label(points[p]); };
  const PermGroup& grp = kk.is_whole() ? x.group() : kk.as_group();
  return GSetAccess::make(grp, n, std::move(table), std::move(labels));
}

}  // namespace normtower
