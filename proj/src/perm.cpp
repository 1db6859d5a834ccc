#include "normtower/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "normtower/error.hpp"

namespace normtower {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedSpec: return "MalformedSpec";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::EnumerationCapExceeded: return "EnumerationCapExceeded";
    case ErrorKind::GammaCapExceeded: return "GammaCapExceeded";
    case ErrorKind::SubgroupMismatch: return "SubgroupMismatch";
    case ErrorKind::GroupMismatch: return "GroupMismatch";
    case ErrorKind::MarkMismatch: return "MarkMismatch";
    case ErrorKind::IsoMismatch: return "IsoMismatch";
    case ErrorKind::NotCoveringMaximum: return "NotCoveringMaximum";
    case ErrorKind::NotAnInterval: return "NotAnInterval";
    case ErrorKind::IntervalViolation: return "IntervalViolation";
    case ErrorKind::BadIndices: return "BadIndices";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

Perm::Perm(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p]) {
      throw Error(ErrorKind::MalformedSpec, "image list is not a bijection");
    }
    seen[p] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Perm p;
  p.images_ = std::move(img);
  return p;
}

Perm Perm::operator*(const Perm& rhs) const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[x] = images_[rhs.images_[x]];
  }
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) {
    out.images_[images_[x]] = static_cast<Point>(x);
  }
  return out;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

std::size_t Perm::order() const {
  std::size_t result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x]) continue;
    std::size_t len = 0;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    out += '(';
    bool first = true;
    for (std::size_t y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      if (!first) out += ' ';
      out += std::to_string(y + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

namespace {

void skip_spaces(std::string_view text, std::size_t& i) {
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
}

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::MalformedSpec, "'" + std::string(text) + "': " + why);
}

// Splits at commas that sit outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view text) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')') --depth;
    if (depth < 0) malformed(text, "unbalanced ')'");
    if (text[i] == ',' && depth == 0) {
      parts.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  if (depth != 0) malformed(text, "unbalanced '('");
  parts.push_back(text.substr(start));
  return parts;
}

// Reads the cycles of one generator as 0-based point lists.
std::vector<std::vector<std::size_t>> read_cycle_lists(std::string_view text) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t i = 0;
  skip_spaces(text, i);
  if (i == text.size()) malformed(text, "empty generator");
  while (i < text.size()) {
    if (text[i] != '(') malformed(text, "expected '('");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_spaces(text, i);
      if (i >= text.size()) malformed(text, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        malformed(text, std::string("unexpected character '") + text[i] + "'");
      }
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > 65535) malformed(text, "point label too large");
        ++i;
      }
      if (value == 0) malformed(text, "points are labeled from 1");
      cycle.push_back(value - 1);
    }
    cycles.push_back(std::move(cycle));
    skip_spaces(text, i);
  }
  return cycles;
}

}  // namespace

std::size_t max_point(std::string_view text) {
  std::size_t best = 0;
  for (auto part : split_top_level(text)) {
    for (const auto& cycle : read_cycle_lists(part)) {
      for (std::size_t p : cycle) best = std::max(best, p + 1);
    }
  }
  return best;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<Perm::Point> img(degree);
  std::iota(img.begin(), img.end(), Perm::Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : read_cycle_lists(text)) {
    for (std::size_t p : cycle) {
      if (p >= degree) malformed(text, "point exceeds degree " + std::to_string(degree));
      if (used[p]) malformed(text, "cycles must be disjoint");
      used[p] = true;
    }
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      img[cycle[j]] = static_cast<Perm::Point>(cycle[(j + 1) % cycle.size()]);
    }
  }
  return Perm(std::move(img));
}

std::vector<Perm> parse_generators(std::string_view text, std::size_t degree) {
  if (degree == 0) degree = std::max<std::size_t>(max_point(text), 1);
  std::vector<Perm> gens;
  for (auto part : split_top_level(text)) gens.push_back(parse_cycles(part, degree));
  return gens;
}

std::string format_generators(const std::vector<Perm>& gens) {
  std::string out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ',';
    out += gens[i].cycles();
  }
  return out;
}

}  // namespace normtower
