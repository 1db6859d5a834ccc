#pragma once

#include <string>
#include <vector>

#include "normtower/orbit_poset.hpp"

namespace normtower {

/// The localization functor L_I = F((E F')_+, ~E F'' ^ -) of an interval
/// I = I' \ I'' of the orbit poset, kept as the two families.
///
/// Rendering simplifies the two degenerate factors: E(all subgroups)_+ is
/// S^0, so the outer mapping spectrum is dropped, and ~E of the empty family
/// is S^0, so the smash is dropped. The empty interval is the zero functor.
struct LocalizationDescriptor {
  Family family_Iprime;
  Family family_Idoubleprime;
  bool zero = false;

  static LocalizationDescriptor identity(const PermGroup& g, const Limits& limits = {});
  static LocalizationDescriptor zero_functor(const PermGroup& g);

  bool is_identity() const;
  /// Applied to `argument`, e.g. "F((EC5)_+, N)".
  std::string render(const std::string& argument = "N") const;
  std::string render_latex(const std::string& argument = "N_H^G") const;

  bool operator==(const LocalizationDescriptor& other) const;
};

LocalizationDescriptor localization_descriptor(const OrbitPoset& poset, const PosetInterval& interval);

/// Families as "{e,C2}", with the family {e} written as "E<group>" style
/// shorthand by the renderers ("EC5", "~EC5").
std::string family_name(const Family& f);
std::string family_name_latex(const Family& f);

/// Composite L_1 L_2 ... L_j applied to `argument`; "0" if any factor is zero.
std::string render_composite(const std::vector<LocalizationDescriptor>& outer_to_inner,
                             const std::string& argument = "N");
std::string render_composite_latex(const std::vector<LocalizationDescriptor>& outer_to_inner,
                                   const std::string& argument = "N_H^G");

struct TowerLevel {
  std::size_t n = 0;
  Family family;                      // F_n
  LocalizationDescriptor truncation;  // P_n = ~E F_n ^ N
  std::string p_lower;                // rendered P_n
  std::string p_upper;                // rendered P^n = F(~E F_n, N)
};

struct TowerReport {
  PermGroup group;
  Subgroup h;
  std::size_t top_degree = 0;
  std::vector<std::size_t> jump_set;
  DegreeMap q;
  std::vector<TowerLevel> levels;  // n = 0 .. top_degree
};

TowerReport tower_report(const PermGroup& g, const Subgroup& h, const Limits& limits = {});

/// Positions n >= 1 where the rendered P_n differs from P_{n-1}.
std::vector<std::size_t> descriptor_changes(const TowerReport& report);

struct FractureCorner {
  std::string position;     // "I", "I1", "I2", "I2I1"
  std::string goodwillie;   // e.g. "L_0 P_5 N"
  std::string equivariant;  // e.g. "F((EC5)_+, N)"
  std::string equivariant_latex;
  std::vector<LocalizationDescriptor> factors;  // outer to inner
};

struct HypothesisViolation {
  std::size_t upper = 0;  // class in q^-1(I1)
  std::size_t lower = 0;  // class in q^-1(I2)
};

struct FracturePlan {
  PermGroup group;
  Subgroup h;
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t n = 0;
  PosetInterval interval;     // q^-1([k,n])
  PosetInterval interval_1;   // q^-1([m,n])
  PosetInterval interval_2;   // q^-1([k,m-1])
  /// (F_{k-1}, F_n), the families of L_{k-1} P_n; F_{-1} is all subgroups.
  Family goodwillie_upper;
  Family goodwillie_lower;
  /// F_{k-1} \ F_n equals q^-1([k,n]).
  bool goodwillie_families_valid = false;
  std::vector<FractureCorner> corners;
  bool hypothesis_pass = false;
  std::vector<HypothesisViolation> violations;
};

/// Throws BadIndices unless 0 <= k < m <= n <= [G:H].
FracturePlan fracture_plan(const PermGroup& g, const Subgroup& h, std::size_t k, std::size_t m, std::size_t n,
                           const Limits& limits = {});

/// tikzcd source of a 2x2 square, corners in the order I, I1, I2, I2I1.
std::string tikzcd_square(const std::vector<std::string>& corners);

struct ExampleCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CpkReport {
  std::size_t p = 0;
  std::size_t k = 0;
  TowerReport tower;
  std::vector<ExampleCheck> checks;
  bool pass = false;
};

/// Tower of N_e^{C_{p^k}} with the checks: F_n constant on each block
/// [p^j, p^{j+1} - 1] and F_{p^m} = {K : |K| < p^{k-m}} for 0 <= m <= k.
/// Throws MalformedSpec unless p is prime and k >= 1, OrderCapExceeded when
/// p^k exceeds the cap.
CpkReport cpk_tower(std::size_t p, std::size_t k, const Limits& limits = {});

struct GammaRow {
  Subgroup representative;  // lexicographically minimal in its class
  std::string name;
  std::size_t order = 0;
  std::size_t prime = 1;  // p(K), 1 for the trivial subgroup
  std::size_t orbit_count = 0;
  std::size_t weyl_order = 0;
  std::size_t double_cosets = 0;  // |K \ S_n / S_{n-1}|
  bool identity_holds = false;
};

struct GammaSplitTable {
  std::size_t n = 0;
  PermGroup group;  // S_n
  std::vector<GammaRow> rows;
  bool pass = false;
};

/// The symmetric group on n points (the trivial group on one point for n = 1).
PermGroup symmetric_group(std::size_t n, const Limits& limits = {});

/// Rows for the prime-power subgroup classes of S_n, found inside Sylow
/// subgroups and merged up to S_n conjugacy. Ordered by subgroup order, then
/// by representative. Throws GammaCapExceeded above limits.gamma_cap and
/// BadIndices for n = 0.
GammaSplitTable gamma_splitting(std::size_t n, const Limits& limits = {});
/// Same rows from the full subgroup lattice of S_n.
GammaSplitTable gamma_splitting_by_lattice(std::size_t n, const Limits& limits = {});

struct GammaTowerDescriptors {
  std::size_t n = 0;
  std::size_t k = 0;
  Family family_k;            // {K : |[n]/K| > k}
  Family family_k_minus_1;
  std::string truncation;     // P_k Gamma^n
  std::vector<std::string> corners;  // P_k, top right, P_{k-1}, bottom right
  std::vector<std::string> corners_latex;
};

/// Throws BadIndices unless 1 <= k <= n, GammaCapExceeded above the cap.
GammaTowerDescriptors gamma_tower_descriptors(std::size_t n, std::size_t k, const Limits& limits = {});

}  // namespace normtower
