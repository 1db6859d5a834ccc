#include "normtower/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace normtower {

namespace detail {

struct GroupData {
  std::string id;
  std::size_t degree = 0;
  std::vector<Perm> elements;
  std::vector<Perm> generators;
  std::vector<ElemId> generator_ids;
  std::vector<ElemId> inverse;
  std::vector<ElemId> table;  // row-major products; empty for large groups

  mutable std::once_flag lattice_once;
  mutable std::unique_ptr<LatticeData> lattice;
};

struct SubgroupData {
  std::vector<ElemId> elems;
  std::vector<std::uint64_t> bits;

  mutable std::once_flag gens_once;
  mutable std::vector<ElemId> gens;
  mutable std::once_flag group_once;
  mutable std::optional<PermGroup> group;
};

struct LatticeData {
  std::vector<std::shared_ptr<const SubgroupData>> subgroups;
  std::map<std::vector<std::uint64_t>, std::size_t> by_bits;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> members;
  std::vector<std::string> names;
  std::vector<char> subconj;
  std::vector<std::size_t> marks;
};

}  // namespace detail

namespace {

using detail::GroupData;
using detail::LatticeData;
using detail::SubgroupData;

constexpr std::size_t kTableLimit = 2048;

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) {
  return (bits[i / 64] >> (i % 64)) & 1U;
}

void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) {
  bits[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool bits_subset(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

std::optional<ElemId> find_in(const GroupData& d, const Perm& p) {
  auto it = std::lower_bound(d.elements.begin(), d.elements.end(), p);
  if (it == d.elements.end() || *it != p) return std::nullopt;
  return static_cast<ElemId>(it - d.elements.begin());
}

ElemId mul_in(const GroupData& d, ElemId a, ElemId b) {
  if (!d.table.empty()) return d.table[a * d.elements.size() + b];
  return *find_in(d, d.elements[a] * d.elements[b]);
}

std::shared_ptr<SubgroupData> make_subgroup_data(std::size_t group_order,
                                                 std::vector<ElemId> elems) {
  auto sd = std::make_shared<SubgroupData>();
  std::sort(elems.begin(), elems.end());
  sd->bits.assign(words_for(group_order), 0);
  for (ElemId e : elems) set_bit(sd->bits, e);
  sd->elems = std::move(elems);
  return sd;
}

// Closure of the generators under right multiplication, starting at the
// identity. If `allowed` is given, stops early (returning nullopt) once an
// element outside it is produced.
std::optional<std::vector<ElemId>> close(const GroupData& d, std::span<const ElemId> gens,
                                         const std::vector<std::uint64_t>* allowed = nullptr) {
  const std::size_t n = d.elements.size();
  std::vector<std::uint64_t> seen(words_for(n), 0);
  std::vector<ElemId> out{0};
  set_bit(seen, 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (ElemId s : gens) {
      ElemId y = mul_in(d, out[i], s);
      if (test_bit(seen, y)) continue;
      if (allowed && !test_bit(*allowed, y)) return std::nullopt;
      set_bit(seen, y);
      out.push_back(y);
    }
  }
  return out;
}

std::vector<ElemId> greedy_generators(const GroupData& d, const std::vector<ElemId>& elems) {
  std::vector<ElemId> gens;
  std::vector<std::uint64_t> have(words_for(d.elements.size()), 0);
  set_bit(have, 0);
  for (ElemId e : elems) {
    if (test_bit(have, e)) continue;
    gens.push_back(e);
    const auto generated = close(d, gens);
    for (ElemId x : *generated) set_bit(have, x);
  }
  return gens;
}

std::unique_ptr<LatticeData> build_lattice(const GroupData& d) {
  const std::size_t n = d.elements.size();
  auto lat = std::make_unique<LatticeData>();

  std::map<std::vector<std::uint64_t>, std::size_t> index;
  std::vector<std::shared_ptr<SubgroupData>> subs;
  std::vector<std::vector<ElemId>> join_gens;
  std::vector<char> representative;

  // Adds a subgroup together with its whole conjugacy class; only the first
  // member is marked as the class representative.
  auto add = [&](const std::vector<ElemId>& elems, const std::vector<ElemId>& gens) {
    auto sd = make_subgroup_data(n, elems);
    if (index.count(sd->bits)) return false;
    for (ElemId x = 0; x < n; ++x) {
      std::vector<ElemId> conj_elems;
      conj_elems.reserve(elems.size());
      for (ElemId s : elems) conj_elems.push_back(mul_in(d, mul_in(d, x, s), d.inverse[x]));
      auto cd = make_subgroup_data(n, std::move(conj_elems));
      if (index.count(cd->bits)) continue;
      std::vector<ElemId> conj_gens;
      for (ElemId s : gens) conj_gens.push_back(mul_in(d, mul_in(d, x, s), d.inverse[x]));
      index.emplace(cd->bits, subs.size());
      representative.push_back(x == 0);
      subs.push_back(std::move(cd));
      join_gens.push_back(std::move(conj_gens));
    }
    return true;
  };

  // Cyclic subgroups seed the search.
  std::vector<ElemId> cyclic_gens;
  for (ElemId e = 0; e < n; ++e) {
    std::vector<ElemId> powers{0};
    for (ElemId x = e; x != 0; x = mul_in(d, x, e)) powers.push_back(x);
    if (index.count(make_subgroup_data(n, powers)->bits)) continue;
    add(powers, e == 0 ? std::vector<ElemId>{} : std::vector<ElemId>{e});
    if (e != 0) cyclic_gens.push_back(e);
  }
  // Conjugate cyclic subgroups were added alongside their representative.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!join_gens[i].empty() && !representative[i]) cyclic_gens.push_back(join_gens[i].front());
  }

  // Every subgroup is a join of cyclic subgroups, and a join with a class
  // representative is conjugate to one found from that representative.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!representative[i]) continue;
    for (ElemId c : cyclic_gens) {
      if (test_bit(subs[i]->bits, c)) continue;
      std::vector<ElemId> gens = join_gens[i];
      gens.push_back(c);
      const auto joined = close(d, gens);
      add(*joined, gens);
    }
  }

  std::vector<std::size_t> order(subs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (subs[a]->elems.size() != subs[b]->elems.size()) {
      return subs[a]->elems.size() < subs[b]->elems.size();
    }
    return subs[a]->elems < subs[b]->elems;
  });
  for (std::size_t i : order) {
    lat->by_bits.emplace(subs[i]->bits, lat->subgroups.size());
    lat->subgroups.push_back(subs[i]);
  }

  const std::size_t count = lat->subgroups.size();
  lat->class_of.assign(count, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < count; ++i) {
    if (lat->class_of[i] != static_cast<std::size_t>(-1)) continue;
    const std::size_t c = lat->members.size();
    std::set<std::size_t> conjugates;
    const auto& elems = lat->subgroups[i]->elems;
    for (ElemId x = 0; x < n; ++x) {
      std::vector<std::uint64_t> bits(words_for(n), 0);
      for (ElemId s : elems) set_bit(bits, mul_in(d, mul_in(d, x, s), d.inverse[x]));
      conjugates.insert(lat->by_bits.at(bits));
    }
    for (std::size_t j : conjugates) lat->class_of[j] = c;
    lat->members.emplace_back(conjugates.begin(), conjugates.end());
  }

  const std::size_t classes = lat->members.size();
  lat->subconj.assign(classes * classes, 0);
  lat->marks.assign(classes * classes, 0);
  for (std::size_t a = 0; a < classes; ++a) {
    const std::size_t normalizer_order = n / lat->members[a].size();
    for (std::size_t b = 0; b < classes; ++b) {
      const auto& rep_b = *lat->subgroups[lat->members[b].front()];
      std::size_t inside = 0;
      for (std::size_t m : lat->members[a]) {
        if (bits_subset(lat->subgroups[m]->bits, rep_b.bits)) ++inside;
      }
      lat->subconj[a * classes + b] = inside > 0;
      lat->marks[a * classes + b] = normalizer_order * inside / rep_b.elems.size();
    }
  }
  return lat;
}

}  // namespace

// PermGroup -----------------------------------------------------------------

PermGroup PermGroup::generate(std::string id, std::size_t degree, std::vector<Perm> generators,
                              const Limits& limits) {
  for (const Perm& p : generators) {
    if (p.degree() != degree) {
      throw Error(ErrorKind::MalformedSpec,
                  "generator " + p.cycles() + " does not have degree " + std::to_string(degree));
    }
  }
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier) {
      for (const Perm& s : generators) {
        Perm y = x * s;
        if (seen.insert(y).second) {
          if (seen.size() > limits.group_order_cap) {
            throw Error(ErrorKind::OrderCapExceeded,
                        "group '" + id + "' has order above the cap of " +
                            std::to_string(limits.group_order_cap));
          }
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }
  return from_sorted_elements(std::move(id), {seen.begin(), seen.end()}, std::move(generators));
}

PermGroup PermGroup::from_sorted_elements(std::string id, std::vector<Perm> elements,
                                          std::vector<Perm> generators) {
  auto d = std::make_shared<GroupData>();
  d->id = std::move(id);
  d->degree = elements.front().degree();
  d->elements = std::move(elements);
  d->generators = std::move(generators);
  const std::size_t n = d->elements.size();

  d->inverse.resize(n);
  for (ElemId i = 0; i < n; ++i) d->inverse[i] = *find_in(*d, d->elements[i].inverse());
  if (n <= kTableLimit) {
    d->table.resize(n * n);
    for (ElemId a = 0; a < n; ++a) {
      for (ElemId b = 0; b < n; ++b) {
        d->table[a * n + b] = *find_in(*d, d->elements[a] * d->elements[b]);
      }
    }
  }
  for (const Perm& p : d->generators) {
    ElemId e = *find_in(*d, p);
    if (e != 0 && std::find(d->generator_ids.begin(), d->generator_ids.end(), e) ==
                      d->generator_ids.end()) {
      d->generator_ids.push_back(e);
    }
  }
  return PermGroup(std::move(d));
}

const std::string& PermGroup::id() const { return d_->id; }
std::size_t PermGroup::degree() const { return d_->degree; }
std::size_t PermGroup::order() const { return d_->elements.size(); }
const std::vector<Perm>& PermGroup::elements() const { return d_->elements; }
const Perm& PermGroup::element(ElemId i) const { return d_->elements[i]; }
const std::vector<Perm>& PermGroup::generators() const { return d_->generators; }
const std::vector<ElemId>& PermGroup::generator_ids() const { return d_->generator_ids; }
ElemId PermGroup::mul(ElemId a, ElemId b) const { return mul_in(*d_, a, b); }
ElemId PermGroup::inv(ElemId a) const { return d_->inverse[a]; }
std::optional<ElemId> PermGroup::find(const Perm& p) const { return find_in(*d_, p); }

ElemId PermGroup::index_of(const Perm& p) const {
  if (p.degree() == degree()) {
    if (auto e = find(p)) return *e;
  }
  throw Error(ErrorKind::SubgroupMismatch, p.cycles() + " is not an element of " + id());
}

bool PermGroup::same_as(const PermGroup& other) const {
  return d_ == other.d_ || (degree() == other.degree() && elements() == other.elements());
}

bool PermGroup::contains_group(const PermGroup& other) const {
  if (other.degree() != degree() || other.order() > order()) return false;
  return std::all_of(other.elements().begin(), other.elements().end(),
                     [&](const Perm& p) { return find(p).has_value(); });
}

bool PermGroup::is_abelian() const {
  for (ElemId a : generator_ids()) {
    for (ElemId b : generator_ids()) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

SubgroupLattice PermGroup::lattice(const Limits& limits) const {
  if (order() > limits.subgroup_enum_cap) {
    throw Error(ErrorKind::OrderCapExceeded,
                "subgroup enumeration of '" + id() + "' (order " + std::to_string(order()) +
                    ") exceeds the cap of " + std::to_string(limits.subgroup_enum_cap));
  }
  std::call_once(d_->lattice_once, [this] {
    auto lat = build_lattice(*d_);
    SubgroupLattice view(*this, lat.get());
    for (std::size_t c = 0; c < lat->members.size(); ++c) {
      lat->names.push_back(structure_name(view.subgroup(lat->members[c].front())));
    }
    d_->lattice = std::move(lat);
  });
  return SubgroupLattice(*this, d_->lattice.get());
}

// Subgroup ------------------------------------------------------------------

Subgroup Subgroup::whole(const PermGroup& g) {
  std::vector<ElemId> all(g.order());
  std::iota(all.begin(), all.end(), ElemId{0});
  return Subgroup(g, make_subgroup_data(g.order(), std::move(all)));
}

Subgroup Subgroup::trivial(const PermGroup& g) {
  return Subgroup(g, make_subgroup_data(g.order(), {0}));
}

Subgroup Subgroup::generated_by(const PermGroup& g, std::span<const ElemId> gens) {
  return Subgroup(g, make_subgroup_data(g.order(), *close(*g.d_, gens)));
}

Subgroup Subgroup::generated_by(const PermGroup& g, const std::vector<Perm>& gens) {
  std::vector<ElemId> ids;
  for (const Perm& p : gens) ids.push_back(g.index_of(p));
  return generated_by(g, ids);
}

Subgroup Subgroup::from_elements(const PermGroup& g, std::vector<ElemId> elems) {
  auto sd = make_subgroup_data(g.order(), std::move(elems));
  sd->elems.erase(std::unique(sd->elems.begin(), sd->elems.end()), sd->elems.end());
  if (sd->elems.empty() || sd->elems.front() != 0) {
    throw Error(ErrorKind::SubgroupMismatch, "element set lacks the identity");
  }
  auto closed = close(*g.d_, sd->elems, &sd->bits);
  if (!closed || closed->size() != sd->elems.size()) {
    throw Error(ErrorKind::SubgroupMismatch, "element set is not closed under composition");
  }
  return Subgroup(g, std::move(sd));
}

Subgroup Subgroup::of(const PermGroup& g, const PermGroup& k) {
  std::vector<ElemId> elems;
  elems.reserve(k.order());
  for (const Perm& p : k.elements()) elems.push_back(g.index_of(p));
  return Subgroup(g, make_subgroup_data(g.order(), std::move(elems)));
}

std::size_t Subgroup::order() const { return d_->elems.size(); }
const std::vector<ElemId>& Subgroup::elements() const { return d_->elems; }
bool Subgroup::contains(ElemId e) const { return test_bit(d_->bits, e); }
const std::vector<std::uint64_t>& Subgroup::bits() const { return d_->bits; }

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return parent_.same_as(other.parent_) && bits_subset(d_->bits, other.d_->bits);
}

const std::vector<ElemId>& Subgroup::generators() const {
  std::call_once(d_->gens_once, [this] { d_->gens = greedy_generators(*parent_.d_, d_->elems); });
  return d_->gens;
}

std::string Subgroup::generator_string() const {
  if (generators().empty()) return "()";
  std::string out;
  for (ElemId e : generators()) {
    if (!out.empty()) out += ',';
    out += parent_.element(e).cycles();
  }
  return out;
}

Subgroup Subgroup::conjugate(ElemId g) const {
  std::vector<ElemId> elems;
  elems.reserve(order());
  for (ElemId s : d_->elems) elems.push_back(parent_.conj(g, s));
  return Subgroup(parent_, make_subgroup_data(parent_.order(), std::move(elems)));
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  if (!parent_.same_as(other.parent_)) {
    throw Error(ErrorKind::SubgroupMismatch, "intersection of subgroups of different groups");
  }
  std::vector<ElemId> elems;
  for (ElemId e : d_->elems) {
    if (other.contains(e)) elems.push_back(e);
  }
  return Subgroup(parent_, make_subgroup_data(parent_.order(), std::move(elems)));
}

const PermGroup& Subgroup::as_group() const {
  // Caching the parent itself would make the lattice own its own group.
  if (is_whole()) return parent_;
  std::call_once(d_->group_once, [this] {
    std::vector<Perm> elems;
    elems.reserve(order());
    for (ElemId e : d_->elems) elems.push_back(parent_.element(e));
    std::vector<Perm> gens;
    for (ElemId e : generators()) gens.push_back(parent_.element(e));
    d_->group = PermGroup::from_sorted_elements(parent_.id() + "<" + generator_string() + ">",
                                                std::move(elems), std::move(gens));
  });
  return *d_->group;
}

bool Subgroup::operator==(const Subgroup& other) const {
  return parent_.same_as(other.parent_) && d_->elems == other.d_->elems;
}

bool Subgroup::operator<(const Subgroup& other) const {
  if (order() != other.order()) return order() < other.order();
  return d_->elems < other.d_->elems;
}

// SubgroupLattice -----------------------------------------------------------

std::size_t SubgroupLattice::subgroup_count() const { return d_->subgroups.size(); }

Subgroup SubgroupLattice::subgroup(std::size_t i) const {
  return Subgroup(group_, d_->subgroups[i]);
}

std::vector<Subgroup> SubgroupLattice::subgroups() const {
  std::vector<Subgroup> out;
  out.reserve(subgroup_count());
  for (std::size_t i = 0; i < subgroup_count(); ++i) out.push_back(subgroup(i));
  return out;
}

std::optional<std::size_t> SubgroupLattice::find(const Subgroup& k) const {
  if (!k.parent().same_as(group_)) return std::nullopt;
  auto it = d_->by_bits.find(k.bits());
  if (it == d_->by_bits.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> SubgroupLattice::find_bits(const std::vector<std::uint64_t>& bits) const {
  auto it = d_->by_bits.find(bits);
  if (it == d_->by_bits.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::class_count() const { return d_->members.size(); }

SubgroupClass SubgroupLattice::class_info(std::size_t c) const {
  return SubgroupClass{c, subgroup(d_->members[c].front()), d_->members[c].size(), d_->names[c]};
}

std::vector<SubgroupClass> SubgroupLattice::classes() const {
  std::vector<SubgroupClass> out;
  for (std::size_t c = 0; c < class_count(); ++c) out.push_back(class_info(c));
  return out;
}

std::size_t SubgroupLattice::class_of_subgroup(std::size_t i) const { return d_->class_of[i]; }

std::size_t SubgroupLattice::class_of(const Subgroup& k) const {
  auto i = find(k);
  if (!i) throw Error(ErrorKind::SubgroupMismatch, "not a subgroup of " + group_.id());
  return d_->class_of[*i];
}

const std::vector<std::size_t>& SubgroupLattice::class_members(std::size_t c) const {
  return d_->members[c];
}

std::string SubgroupLattice::class_label(std::size_t c) const {
  const auto same = std::count(d_->names.begin(), d_->names.end(), d_->names[c]);
  return same == 1 ? d_->names[c] : class_info(c).display();
}

Subgroup SubgroupLattice::canonical(const Subgroup& k) const {
  auto i = find(k);
  if (!i) throw Error(ErrorKind::SubgroupMismatch, "not a subgroup of " + group_.id());
  return subgroup(*i);
}

bool SubgroupLattice::subconjugate(std::size_t a, std::size_t b) const {
  return d_->subconj[a * class_count() + b] != 0;
}

std::size_t SubgroupLattice::mark(std::size_t a, std::size_t b) const {
  return d_->marks[a * class_count() + b];
}

// Free functions ------------------------------------------------------------

std::vector<Subgroup> enumerate_subgroups(const PermGroup& g, const Limits& limits) {
  return g.lattice(limits).subgroups();
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, const Limits& limits) {
  return g.lattice(limits).classes();
}

namespace {

void require_subgroup(const PermGroup& g, const Subgroup& k, const char* what) {
  if (!k.parent().same_as(g)) {
    throw Error(ErrorKind::SubgroupMismatch,
                std::string(what) + " is not a subgroup of " + g.id());
  }
}

}  // namespace

std::vector<DoubleCoset> double_cosets(const PermGroup& g, const Subgroup& k, const Subgroup& h) {
  require_subgroup(g, k, "K");
  require_subgroup(g, h, "H");
  std::vector<char> seen(g.order(), 0);
  std::vector<DoubleCoset> out;
  for (ElemId x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::size_t size = 0;
    for (ElemId a : k.elements()) {
      ElemId ax = g.mul(a, x);
      for (ElemId b : h.elements()) {
        ElemId y = g.mul(ax, b);
        if (!seen[y]) {
          seen[y] = 1;
          ++size;
        }
      }
    }
    out.push_back({x, size});
  }
  return out;
}

Subgroup normalizer(const PermGroup& g, const Subgroup& k) {
  require_subgroup(g, k, "K");
  std::vector<ElemId> elems;
  for (ElemId x = 0; x < g.order(); ++x) {
    bool normalizes = std::all_of(k.elements().begin(), k.elements().end(),
                                  [&](ElemId s) { return k.contains(g.conj(x, s)); });
    if (normalizes) elems.push_back(x);
  }
  return Subgroup::from_elements(g, std::move(elems));
}

std::size_t normalizer_quotient_order(const PermGroup& g, const Subgroup& k) {
  return normalizer(g, k).order() / k.order();
}

namespace {

CosetTable cosets(const Subgroup& k, bool left) {
  const PermGroup& g = k.parent();
  CosetTable table;
  table.coset_of.assign(g.order(), static_cast<std::size_t>(-1));
  for (ElemId x = 0; x < g.order(); ++x) {
    if (table.coset_of[x] != static_cast<std::size_t>(-1)) continue;
    for (ElemId s : k.elements()) {
      table.coset_of[left ? g.mul(x, s) : g.mul(s, x)] = table.reps.size();
    }
    table.reps.push_back(x);
  }
  return table;
}

}  // namespace

CosetTable left_cosets(const Subgroup& k) { return cosets(k, true); }
CosetTable right_cosets(const Subgroup& k) { return cosets(k, false); }

// Structure names -----------------------------------------------------------

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::string abelian_name(const std::vector<std::size_t>& orders, std::size_t n) {
  // For each prime p, counts of x with x^(p^j) = 1 give the partition of the
  // p-primary part. Primary parts are then merged into invariant factors.
  std::vector<std::size_t> factors;  // descending
  for (std::size_t p : prime_factors(n)) {
    std::vector<std::size_t> rank;  // log_p #{x : x^(p^j) = 1}
    for (std::size_t pj = 1;; pj *= p) {
      std::size_t count = std::count_if(orders.begin(), orders.end(),
                                        [&](std::size_t o) { return pj % o == 0; });
      std::size_t s = 0;
      for (std::size_t c = count; c > 1; c /= p) ++s;
      rank.push_back(s);
      if (rank.size() > 1 && rank.back() == rank[rank.size() - 2]) break;
    }
    // at_least[j] = number of cyclic factors of order >= p^j
    std::vector<std::size_t> at_least(rank.size() + 1, 0);
    for (std::size_t j = 1; j < rank.size(); ++j) at_least[j] = rank[j] - rank[j - 1];
    std::vector<std::size_t> primary;
    std::size_t pj = 1;
    for (std::size_t j = 1; j < rank.size(); ++j) {
      pj *= p;
      for (std::size_t r = at_least[j + 1]; r < at_least[j]; ++r) primary.push_back(pj);
    }
    std::sort(primary.rbegin(), primary.rend());
    if (factors.size() < primary.size()) factors.resize(primary.size(), 1);
    for (std::size_t i = 0; i < primary.size(); ++i) factors[i] *= primary[i];
  }
  std::string name;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
    if (!name.empty()) name += 'x';
    name += "C" + std::to_string(*it);
  }
  return name;
}

}  // namespace

std::string structure_name(const Subgroup& k) {
  const std::size_t n = k.order();
  if (n == 1) return "e";
  const PermGroup& g = k.parent();
  std::vector<std::size_t> orders;
  orders.reserve(n);
  for (ElemId e : k.elements()) orders.push_back(g.element(e).order());
  std::set<std::size_t> distinct(orders.begin(), orders.end());
  if (distinct.count(n)) return "C" + std::to_string(n);

  bool abelian = true;
  const auto& gens = k.generators();
  for (ElemId a : gens) {
    for (ElemId b : gens) abelian = abelian && g.mul(a, b) == g.mul(b, a);
  }
  if (abelian) return abelian_name(orders, n);

  const auto involutions = std::count(orders.begin(), orders.end(), std::size_t{2});
  if (n == 8) return involutions == 5 ? "D4" : "Q8";
  if (n % 2 == 0 && distinct.count(n / 2) && static_cast<std::size_t>(involutions) >= n / 2) {
    return n == 6 ? "S3" : "D" + std::to_string(n / 2);
  }
  const std::set<std::size_t> a4{1, 2, 3}, s4{1, 2, 3, 4}, a5{1, 2, 3, 5}, s5{1, 2, 3, 4, 5, 6};
  if (n == 12 && distinct == a4) return "A4";
  if (n == 24 && distinct == s4) return "S4";
  if (n == 60 && distinct == a5) return "A5";
  if (n == 120 && distinct == s5) return "S5";
  return "G" + std::to_string(n);
}

}  // namespace normtower
