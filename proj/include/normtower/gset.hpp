#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "normtower/group.hpp"

namespace normtower {

using Point = std::uint32_t;

/// Produces the label of a point on demand. Labels are for display only.
using Labeler = std::function<std::string(Point)>;

/// A finite G-set with its full action table.
///
/// Actions are left actions: act(g * h, x) == act(g, act(h, x)), where
/// g * h is the group's composition (apply h first).
class GSet {
 public:
  /// Builds the action from the images of the group's generators (one image
  /// list per entry of g.generators()). Throws MalformedSpec if the images do
  /// not define an action.
  static GSet from_generator_images(const PermGroup& g, std::size_t size,
                                    const std::vector<std::vector<Point>>& images,
                                    Labeler labels = {});
  /// Full table, row-major by element. Validated.
  static GSet from_table(const PermGroup& g, std::size_t size, std::vector<Point> table,
                         Labeler labels = {});
  /// Full table, taken as given. Only for fault injection in tests.
  static GSet unchecked(const PermGroup& g, std::size_t size, std::vector<Point> table,
                        Labeler labels = {});

  static GSet empty(const PermGroup& g);
  /// n points, every element acting trivially.
  static GSet trivial(const PermGroup& g, std::size_t n = 1);
  /// G/K with left translation; point i is the coset of the i-th minimal representative.
  static GSet cosets(const Subgroup& k);
  /// G acting on itself by left translation.
  static GSet regular(const PermGroup& g);

  const PermGroup& group() const { return group_; }
  std::size_t size() const { return size_; }
  Point act(ElemId g, Point x) const { return (*table_)[static_cast<std::size_t>(g) * size_ + x]; }
  std::span<const Point> row(ElemId g) const {
    return {table_->data() + static_cast<std::size_t>(g) * size_, size_};
  }
  std::string label(Point x) const;

 private:
  friend struct GSetAccess;
  GSet(PermGroup g, std::size_t size, std::shared_ptr<const std::vector<Point>> table, Labeler labels)
      : group_(std::move(g)), size_(size), table_(std::move(table)), labels_(std::move(labels)) {}

  PermGroup group_;
  std::size_t size_ = 0;
  std::shared_ptr<const std::vector<Point>> table_;
  Labeler labels_;
};

/// Isomorphism class of a finite G-set: the number of orbits of each
/// stabilizer conjugacy class, indexed like group().lattice().classes().
struct GSetIsoClass {
  PermGroup group;
  std::vector<std::size_t> multiplicity;

  std::size_t orbit_count() const;
  std::size_t point_count() const;
  /// |X^K| for each class K, from the table of marks.
  std::vector<std::size_t> marks() const;
  bool operator==(const GSetIsoClass& other) const;
  GSetIsoClass& operator+=(const GSetIsoClass& other);
  /// "2[G/G] + [G/e]" style, with class names.
  std::string to_string() const;
};

GSetIsoClass zero_class(const PermGroup& g);

/// Point sets of the orbits, each sorted, ordered by minimal point.
std::vector<std::vector<Point>> orbit_partition(const GSet& x);
/// The orbits as transitive G-sets, ordered by minimal point.
std::vector<GSet> orbits(const GSet& x);

/// Stabilizer of a point, as a subgroup of x.group().
Subgroup stabilizer(const GSet& x, Point p);

/// Burnside canonical form. The orbit count per stabilizer class is checked
/// against directly counted fixed points; any disagreement throws MarkMismatch.
GSetIsoClass canonical_form(const GSet& x, const Limits& limits = {});

/// |X^K| for every subgroup class K, counted point by point.
std::vector<std::size_t> mark_vector(const GSet& x, const Limits& limits = {});

enum class CombineKind { DisjointUnion, Product };

/// Throws GroupMismatch unless both sets live over the same group.
GSet combine(CombineKind kind, const GSet& a, const GSet& b);
GSet disjoint_union(const std::vector<GSet>& parts, const PermGroup& g);

/// Same points, action restricted to k (a subgroup of x.group()). The result
/// lives over k.as_group().
GSet restrict(const GSet& x, const Subgroup& k);

/// Restriction along conjugation: `target` is a subgroup of some G containing
/// x.group() = H, with g^-1 target g inside H. The result lives over
/// target.as_group() with t . p = (g^-1 t g) . p. Throws SubgroupMismatch.
GSet twisted_restrict(const GSet& x, const Subgroup& target, const Perm& g);

/// G x_K X for x over K <= g. Points are (coset, point) pairs, encoded as
/// coset * |X| + point, cosets ordered by minimal representative.
GSet induce(const GSet& x, const PermGroup& g);

/// Map_H(G, X) for x over H <= g: functions with f(h g) = h f(g), acted on by
/// (g' f)(g) = f(g g'). A function is stored by its values on the minimal
/// right-coset representatives of H, read as a base-|X| number with the first
/// coset most significant. Throws EnumerationCapExceeded when |X|^[G:H]
/// exceeds limits.enumeration_cap.
GSet coinduce(const GSet& x, const PermGroup& g, const Limits& limits = {});

/// Number of points coinduce would produce, saturating at max size_t.
std::size_t coinduced_size(std::size_t x_size, std::size_t index);

/// Points fixed by every element of k (a subgroup of x.group()).
std::vector<Point> fixed_points(const GSet& x, const Subgroup& k);

/// The action restricted to a subgroup k of x.group() and to a k-stable
/// point subset. Points of the result follow the order of `points`. Throws
/// SubgroupMismatch if the subset is not k-stable.
GSet sub_gset(const GSet& x, const Subgroup& k, const std::vector<Point>& points);

}  // namespace normtower
