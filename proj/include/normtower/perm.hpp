#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace normtower {

/// A permutation of {0, ..., degree-1} stored by its one-line images.
/// Printed and parsed 1-based in cycle notation.
///
/// Products compose right to left: (a * b)(x) = a(b(x)). Together with
/// left actions everywhere this makes action(g*h, x) = action(g, action(h, x)).
class Perm {
 public:
  using Point = std::uint16_t;

  Perm() = default;
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  const std::vector<Point>& images() const { return images_; }

  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;

  /// Cycle notation, 1-based, fixed points omitted; "()" for the identity.
  std::string cycles() const;

  // Lexicographic on one-line images; this is the canonical element order.
  auto operator<=>(const Perm&) const = default;
  bool operator==(const Perm&) const = default;

 private:
  std::vector<Point> images_;
};

/// Parses one permutation written as disjoint cycles, e.g. "(1 2 3)(4 5)".
Perm parse_cycles(std::string_view text, std::size_t degree);

/// Parses a comma-separated generator list, e.g. "(1 2 3),(1 2)".
/// When degree is 0 it is inferred from the largest point mentioned.
std::vector<Perm> parse_generators(std::string_view text, std::size_t degree);

/// Largest point mentioned in a generator list (0 if none).
std::size_t max_point(std::string_view text);

std::string format_generators(const std::vector<Perm>& gens);

}  // namespace normtower
