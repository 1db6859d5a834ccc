#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "normtower/error.hpp"
#include "normtower/perm.hpp"

namespace normtower {

/// Index of an element in a group's sorted element list. Index 0 is always
/// the identity, since it is lexicographically minimal.
using ElemId = std::uint32_t;

/// Size limits. These are configuration, not constants.
struct Limits {
  std::size_t group_order_cap = 2000;
  std::size_t subgroup_enum_cap = 2000;
  std::size_t enumeration_cap = 1'000'000;
  std::size_t gamma_cap = 6;
};

namespace detail {
struct GroupData;
struct SubgroupData;
struct LatticeData;
}  // namespace detail

class Subgroup;
class SubgroupLattice;

/// A finite permutation group with its complete, sorted element list.
/// Cheap to copy; all copies share the same immutable data.
class PermGroup {
 public:
  /// Closes the generators under composition. Throws OrderCapExceeded when
  /// the generated order passes limits.group_order_cap.
  static PermGroup generate(std::string id, std::size_t degree,
                            std::vector<Perm> generators,
                            const Limits& limits = {});

  const std::string& id() const;
  std::size_t degree() const;
  std::size_t order() const;
  const std::vector<Perm>& elements() const;
  const Perm& element(ElemId i) const;
  const std::vector<Perm>& generators() const;
  /// Non-identity generators as element indices, without repeats.
  const std::vector<ElemId>& generator_ids() const;

  static constexpr ElemId identity() { return 0; }
  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  /// a * b * a^-1
  ElemId conj(ElemId a, ElemId b) const { return mul(mul(a, b), inv(a)); }

  std::optional<ElemId> find(const Perm& p) const;
  /// Like find, but throws SubgroupMismatch for a foreign permutation.
  ElemId index_of(const Perm& p) const;

  /// Same degree and same element list.
  bool same_as(const PermGroup& other) const;
  /// Every element of `other` lies in this group.
  bool contains_group(const PermGroup& other) const;
  bool is_abelian() const;

  /// Subgroup lattice, computed once and shared by all copies. Throws
  /// OrderCapExceeded when order() > limits.subgroup_enum_cap.
  SubgroupLattice lattice(const Limits& limits = {}) const;

 private:
  friend class Subgroup;
  friend class SubgroupLattice;
  explicit PermGroup(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  static PermGroup from_sorted_elements(std::string id, std::vector<Perm> elements,
                                        std::vector<Perm> generators);

  std::shared_ptr<const detail::GroupData> d_;
};

/// A subgroup of a PermGroup, held as a sorted set of parent element indices.
class Subgroup {
 public:
  static Subgroup whole(const PermGroup& g);
  static Subgroup trivial(const PermGroup& g);
  static Subgroup generated_by(const PermGroup& g, std::span<const ElemId> gens);
  /// Throws SubgroupMismatch if a generator does not lie in g.
  static Subgroup generated_by(const PermGroup& g, const std::vector<Perm>& gens);
  /// Throws SubgroupMismatch if the set is not closed or lacks the identity.
  static Subgroup from_elements(const PermGroup& g, std::vector<ElemId> elems);
  /// The elements of `k` viewed inside `g`; SubgroupMismatch unless k <= g.
  static Subgroup of(const PermGroup& g, const PermGroup& k);

  const PermGroup& parent() const { return parent_; }
  std::size_t order() const;
  const std::vector<ElemId>& elements() const;
  bool contains(ElemId e) const;
  bool is_subset_of(const Subgroup& other) const;
  bool is_whole() const { return order() == parent_.order(); }

  /// Lexicographically greedy generating set: walk the sorted elements and
  /// keep each one not already generated by the earlier picks.
  const std::vector<ElemId>& generators() const;
  std::string generator_string() const;

  /// g K g^-1
  Subgroup conjugate(ElemId g) const;
  Subgroup intersect(const Subgroup& other) const;

  /// The subgroup as a group in its own right (same degree). Its element i
  /// is parent element elements()[i]. Built once per subgroup value.
  const PermGroup& as_group() const;

  const std::vector<std::uint64_t>& bits() const;

  bool operator==(const Subgroup& other) const;
  /// Order first, then the sorted element index list.
  bool operator<(const Subgroup& other) const;

 private:
  friend class SubgroupLattice;
  Subgroup(PermGroup parent, std::shared_ptr<const detail::SubgroupData> d)
      : parent_(std::move(parent)), d_(std::move(d)) {}

  PermGroup parent_;
  std::shared_ptr<const detail::SubgroupData> d_;
};

struct SubgroupClass {
  std::size_t index = 0;
  Subgroup representative;
  std::size_t class_size = 0;
  /// Structural label such as "e", "C3", "C2^2", "S3"; not unique.
  std::string name;

  std::size_t order() const { return representative.order(); }
  /// Unique within the parent group: "K<index>".
  std::string id() const { return "K" + std::to_string(index); }
  std::string display() const { return id() + ":" + name; }
};

/// All subgroups of a group, sorted by (order, element set), with their
/// conjugacy classes, the subconjugacy relation between classes and the
/// table of marks.
class SubgroupLattice {
 public:
  const PermGroup& group() const { return group_; }

  std::size_t subgroup_count() const;
  Subgroup subgroup(std::size_t i) const;
  std::vector<Subgroup> subgroups() const;
  std::optional<std::size_t> find(const Subgroup& k) const;
  /// Index of the subgroup whose element set, as a bitset over element ids,
  /// is `bits`. Sets that are not subgroups are never found.
  std::optional<std::size_t> find_bits(const std::vector<std::uint64_t>& bits) const;

  std::size_t class_count() const;
  SubgroupClass class_info(std::size_t c) const;
  std::vector<SubgroupClass> classes() const;
  std::size_t class_of_subgroup(std::size_t i) const;
  /// Throws SubgroupMismatch if k is not a subgroup of this group.
  std::size_t class_of(const Subgroup& k) const;
  const std::vector<std::size_t>& class_members(std::size_t c) const;

  /// The class name when it is unique among this lattice's classes,
  /// otherwise the "K<i>:name" display form.
  std::string class_label(std::size_t c) const;
  /// The lattice's own instance of k (shares cached data such as as_group()).
  /// Throws SubgroupMismatch if k is not a subgroup of this group.
  Subgroup canonical(const Subgroup& k) const;

  std::size_t trivial_class() const { return 0; }
  std::size_t whole_class() const { return class_count() - 1; }

  /// Class a is subconjugate to class b: some conjugate of K_a lies in K_b.
  bool subconjugate(std::size_t a, std::size_t b) const;
  /// |(G/K_b)^{K_a}|, the number of cosets of K_b fixed by K_a.
  std::size_t mark(std::size_t a, std::size_t b) const;

 private:
  friend class PermGroup;
  SubgroupLattice(PermGroup g, const detail::LatticeData* d) : group_(std::move(g)), d_(d) {}

  PermGroup group_;
  const detail::LatticeData* d_;
};

std::vector<Subgroup> enumerate_subgroups(const PermGroup& g, const Limits& limits = {});
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, const Limits& limits = {});

struct DoubleCoset {
  ElemId representative;  // minimal element of K g H
  std::size_t size;
};

/// K\G/H. Representatives are minimal in the canonical element order and
/// the list is sorted by representative.
std::vector<DoubleCoset> double_cosets(const PermGroup& g, const Subgroup& k, const Subgroup& h);

/// |N_G(K)| / |K|
std::size_t normalizer_quotient_order(const PermGroup& g, const Subgroup& k);
Subgroup normalizer(const PermGroup& g, const Subgroup& k);

/// Coset decomposition with minimal representatives, ordered by representative.
struct CosetTable {
  std::vector<ElemId> reps;
  std::vector<std::size_t> coset_of;  // indexed by ElemId of the parent
};
/// Left cosets gK.
CosetTable left_cosets(const Subgroup& k);
/// Right cosets Kg.
CosetTable right_cosets(const Subgroup& k);

/// Label for a subgroup's isomorphism type, good enough for reports.
std::string structure_name(const Subgroup& k);

// Catalog ------------------------------------------------------------------

/// Either a catalog name ("C5", "D4", "S3", "C2xC2", ...) or an explicit
/// generator list in cycle notation with a degree (0 = infer).
struct GroupSpec {
  std::string catalog;
  std::string generators;
  std::size_t degree = 0;
};

PermGroup build_group(const GroupSpec& spec, const Limits& limits = {});
PermGroup build_catalog_group(std::string_view name, const Limits& limits = {});

/// Resolves a subgroup given on a command line: "e" (trivial), "G" (whole
/// group) or a generator list in cycle notation.
Subgroup parse_subgroup(const PermGroup& g, std::string_view text);

}  // namespace normtower
