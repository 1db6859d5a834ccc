#pragma once

#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "normtower/group.hpp"

namespace normtower {

/// Indices of subgroup conjugacy classes (positions in lattice().classes()).
using ClassSet = std::set<std::size_t>;

/// Transitive G-sets G/K up to isomorphism, one per subgroup class, with
/// G/K >= G/L iff K is subconjugate to L. G/e is the maximum and G/G the
/// minimum.
class OrbitPoset {
 public:
  explicit OrbitPoset(const PermGroup& g, const Limits& limits = {});

  const PermGroup& group() const { return lattice_.group(); }
  const SubgroupLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.class_count(); }
  std::size_t maximum() const { return lattice_.trivial_class(); }
  std::size_t minimum() const { return lattice_.whole_class(); }
  ClassSet all() const;

  bool geq(std::size_t a, std::size_t b) const { return lattice_.subconjugate(a, b); }
  bool greater(std::size_t a, std::size_t b) const { return a != b && geq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return geq(a, b) || geq(b, a); }

  /// Covering pairs (upper, lower), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges() const;

  /// "G/" followed by the class label.
  std::string label(std::size_t c) const;

 private:
  SubgroupLattice lattice_;
};

OrbitPoset build_orbit_poset(const PermGroup& g, const Limits& limits = {});

/// q_H(G/K) = |K\G/H| for each class K.
struct DegreeMap {
  PermGroup group;
  Subgroup h;
  std::vector<std::size_t> values;

  std::size_t operator()(std::size_t c) const { return values[c]; }
  /// [G:H], the value at G/e.
  std::size_t index() const { return group.order() / h.order(); }
  /// Distinct values, ascending.
  std::vector<std::size_t> image() const;
};

/// Throws SubgroupMismatch unless h is a subgroup of g.
DegreeMap degree_map(const PermGroup& g, const Subgroup& h, const Limits& limits = {});

/// A set of subgroup classes closed under subconjugation. May be empty.
struct Family {
  PermGroup group;
  ClassSet classes;

  bool empty() const { return classes.empty(); }
  bool contains(std::size_t c) const { return classes.count(c) > 0; }
  bool operator==(const Family& other) const {
    return group.same_as(other.group) && classes == other.classes;
  }
};

/// True iff every class subconjugate to a member is a member.
bool is_family(const OrbitPoset& poset, const ClassSet& classes);

/// {K : q(G/K) > n}
Family family_Fn(const OrbitPoset& poset, const DegreeMap& q, std::size_t n);

/// Value of delta on the empty family.
struct Infinite {
  bool operator==(const Infinite&) const = default;
};
using Degree = std::variant<std::size_t, Infinite>;
std::string to_string(const Degree& d);

/// min over the family of q(G/K); Infinite for the empty family.
Degree delta(const Family& f, const DegreeMap& q);

/// Interval of the orbit poset: if x >= z >= y with x, y members then z is a member.
struct PosetInterval {
  ClassSet members;

  bool empty() const { return members.empty(); }
  bool contains(std::size_t c) const { return members.count(c) > 0; }
  bool operator==(const PosetInterval& other) const = default;
};

bool is_interval(const OrbitPoset& poset, const ClassSet& members);

/// The family's classes, read as the interval {G/K : K in the family}.
PosetInterval family_to_interval(const Family& f);
/// Inverse of family_to_interval. Throws NotAnInterval for non-intervals and
/// NotCoveringMaximum for a nonempty interval without G/e.
Family interval_to_family(const OrbitPoset& poset, const PosetInterval& i);

/// I = upper \ lower with G/e in upper and lower empty or containing G/e.
/// For the empty interval both parts are empty and `empty_marker` is set.
struct IntervalDecomposition {
  PosetInterval upper;
  PosetInterval lower;
  bool empty_marker = false;
};

/// The decomposition with the smallest upper part: upper is the set of
/// elements lying above some member of I, and lower = upper \ I. Throws
/// NotAnInterval.
IntervalDecomposition decompose_interval(const OrbitPoset& poset, const PosetInterval& i);

/// {G/K : lo <= q(G/K) <= hi}; empty when lo > hi. Throws
/// IntervalViolation if the result is not an interval.
PosetInterval preimage_interval(const OrbitPoset& poset, const DegreeMap& q, std::size_t lo, std::size_t hi);

}  // namespace normtower
