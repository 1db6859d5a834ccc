#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "normtower/gset.hpp"

namespace normtower {

/// Catalog names of every group of order at most `max_order` that the sweep
/// visits: cyclic, dihedral, symmetric and a list of direct products.
std::vector<std::string> sweep_catalog(std::size_t max_order);

/// A random G-set with at most `max_size` points: a disjoint union of coset
/// spaces G/K with K drawn uniformly from the subgroup list, points shuffled.
GSet sample_gset(const PermGroup& g, std::mt19937_64& rng, std::size_t max_size);
/// Same construction with exactly `size` points.
GSet sample_gset_of_size(const PermGroup& g, std::mt19937_64& rng, std::size_t size);

struct SweepConfig {
  std::size_t max_order = 24;
  std::size_t max_arity = 3;
  std::size_t tuples_per_arity = 50;
  std::size_t max_set_size = 3;
  std::size_t lemma_max_order = 12;
  /// Cases whose coinduced set or lambda table would exceed this many
  /// points are skipped and logged.
  std::size_t max_points = 100'000;
  /// Exhaustive family enumeration stops at this many families per group;
  /// the rest of the bijection check uses the structured families only.
  std::size_t max_families = 4096;
  std::uint64_t seed = 20240601;
  bool inject_fault = false;
  Limits limits;
};

struct SuiteCounts {
  std::string name;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct SweepEvent {
  std::string suite;
  std::string group;
  std::string h;
  std::string detail;
  std::string kind;  // error kind for failures, empty otherwise
  std::size_t count = 1;
};

struct SweepResult {
  std::vector<SuiteCounts> suites;
  std::vector<SweepEvent> failures;
  std::vector<SweepEvent> skips;
  std::size_t groups = 0;
  std::size_t cases = 0;

  bool pass() const { return failures.empty(); }
  SuiteCounts& suite(const std::string& name);
  const SuiteCounts* find(const std::string& name) const;
};

/// Suites: decomposition, mackey, lemma, surjectivity, tower, monotonicity,
/// bijection. `progress` is called with each group name before it is swept.
SweepResult run_sweep(const SweepConfig& config, const std::function<void(const std::string&)>& progress = {});

/// The worked examples: C_p towers and squares, C_{p^k} checks, Gamma tables
/// against the full lattice, and the S3 hypothesis violation. Suite "examples".
SweepResult run_example_checks(const Limits& limits = {});

}  // namespace normtower
