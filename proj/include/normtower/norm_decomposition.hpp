#pragma once

#include <memory>
#include <string>
#include <vector>

#include "normtower/gset.hpp"

namespace normtower {

/// One double coset G_lambda g H of a lambda class.
struct LambdaFactor {
  ElemId representative = 0;  // minimal element of the double coset
  Subgroup h_g;               // G_lambda cap g H g^-1, as a subgroup of G
  std::size_t h_g_class = 0;  // class of h_g inside G_lambda's own lattice
  std::size_t index = 0;      // lambda(gH), 0-based
};

/// A G-orbit of maps lambda: G/H -> [n].
struct LambdaClass {
  PermGroup group;
  Subgroup h;
  std::size_t n = 0;
  /// Orbit-minimal map: lambda value (0-based) of each left coset of H, the
  /// cosets ordered by minimal representative.
  std::vector<std::size_t> representative;
  /// Same map as a base-n number, first coset most significant.
  std::size_t code = 0;
  Subgroup stabilizer;  // G_lambda, the lattice instance inside G
  std::size_t stabilizer_class = 0;
  std::size_t orbit_size = 0;
  bool surjective = false;
  std::vector<LambdaFactor> factors;

  std::size_t image_size() const;
  /// "1 1 2" style, 1-based values in coset order.
  std::string representative_string() const;
};

/// All lambda classes, ordered by image size and then by representative, plus
/// the class of every map code.
struct LambdaTable {
  std::vector<LambdaClass> classes;
  std::vector<std::uint32_t> class_of_code;
};

/// Throws EnumerationCapExceeded when n^[G:H] exceeds limits.enumeration_cap.
LambdaTable lambda_table(const PermGroup& g, const Subgroup& h, std::size_t n, const Limits& limits = {});
std::vector<LambdaClass> lambda_classes(const PermGroup& g, const Subgroup& h, std::size_t n,
                                        const Limits& limits = {});

/// Coind_H^G of a disjoint union X_1 + ... + X_n, together with the code of
/// each point's component-index map on G/H. Inputs must live over H.
class IndexedCoinduction {
 public:
  IndexedCoinduction(const PermGroup& g, const Subgroup& h, const std::vector<GSet>& xs,
                     const Limits& limits = {});

  const GSet& coinduced() const { return coind_; }
  std::size_t n() const { return n_; }
  /// Index-map code of a point, in the encoding of LambdaClass::code.
  std::size_t code(Point p) const { return codes_[p]; }

 private:
  GSet coind_;
  std::size_t n_;
  std::vector<std::size_t> codes_;
};

/// The points of Coind_H^G(X_1 + ... + X_n) whose index map is lambda's
/// representative, acted on by G_lambda.
GSet f_lambda(const LambdaClass& lambda, const std::vector<GSet>& xs, const Limits& limits = {});
GSet f_lambda(const LambdaClass& lambda, const IndexedCoinduction& coind);

/// Product over G_lambda\G/H of Coind_{H_g}^{G_lambda} of the g-twisted
/// restriction of X_lambda(g). Compared with f_lambda (or with
/// `reference` when given); throws IsoMismatch when the canonical forms differ.
GSet f_lambda_product_form(const LambdaClass& lambda, const std::vector<GSet>& xs,
                           const Limits& limits = {}, const GSet* reference = nullptr);

struct DecompositionEntry {
  LambdaClass lambda;
  std::size_t f_lambda_size = 0;
  GSetIsoClass induced;  // Ind_{G_lambda}^G F_lambda
  GSetIsoClass direct;   // the points of Coind whose index map lies in the orbit of lambda
  bool matches = false;
};

struct DecompositionReport {
  PermGroup group;
  Subgroup h;
  std::vector<GSetIsoClass> inputs;
  std::vector<DecompositionEntry> entries;
  GSetIsoClass total;  // Coind_H^G of the union
  GSetIsoClass sum;    // sum of the induced entries
  bool pass = false;
  std::string detail;
};

DecompositionReport verify_coind_decomposition(const PermGroup& g, const Subgroup& h,
                                               const std::vector<GSet>& xs, const Limits& limits = {});
/// Same, reusing a lambda table and a coinduction built for these inputs.
DecompositionReport verify_coind_decomposition(const LambdaTable& table, const IndexedCoinduction& coind,
                                               const std::vector<GSet>& xs, const Limits& limits = {});

struct MackeyFactor {
  ElemId representative = 0;
  Subgroup h_g;  // K cap g H g^-1
  std::size_t size = 0;
};

struct MackeyReport {
  PermGroup group;
  Subgroup h;
  Subgroup k;
  std::vector<MackeyFactor> factors;
  GSetIsoClass lhs;  // Res_K Coind_H^G X
  GSetIsoClass rhs;  // product of the twisted coinductions
  bool pass = false;
};

MackeyReport verify_mackey(const PermGroup& g, const Subgroup& h, const Subgroup& k, const GSet& x,
                           const Limits& limits = {});
/// Same, with Coind_H^G X already built.
MackeyReport verify_mackey(const GSet& coinduced, const Subgroup& h, const Subgroup& k, const GSet& x,
                           const Limits& limits = {});

struct SmashFactor {
  std::string h_g_name;  // structure of H_g
  std::size_t h_g_class = 0;
  std::size_t input = 0;  // 0-based
};

struct CrossEffectSummand {
  LambdaClass lambda;
  std::vector<SmashFactor> factors;
  /// "Ind_e^C2(X1 ^ X2)" style.
  std::string descriptor;
};

/// Summands of the n-th cross effect: the surjective lambda classes. Checks
/// |G_lambda\G/H| >= n for each, throwing InvariantViolation otherwise.
std::vector<CrossEffectSummand> cross_effect_summands(const PermGroup& g, const Subgroup& h, std::size_t n,
                                                      const Limits& limits = {});

}  // namespace normtower
