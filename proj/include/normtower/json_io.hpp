#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "normtower/norm_decomposition.hpp"
#include "normtower/orbit_poset.hpp"
#include "normtower/sweep.hpp"
#include "normtower/tower.hpp"

namespace normtower {

using Json = nlohmann::ordered_json;

/// {id, degree, generators}: the group definition document.
Json group_to_json(const PermGroup& g);
/// Inverse of group_to_json; the id is kept. Throws MalformedSpec.
PermGroup group_from_json(const Json& doc, const Limits& limits = {});

/// {id, degree, order, generators, subgroup_count, classes:[...]} with
/// per-class detail; subgroups are listed when `with_subgroups` is set.
Json group_report_json(const PermGroup& g, bool with_subgroups, const Limits& limits = {});

Json subgroup_json(const Subgroup& k);

Json gset_to_json(const GSet& x);
Json iso_class_to_json(const GSetIsoClass& c);

Json double_cosets_json(const PermGroup& g, const Subgroup& k, const Subgroup& h);

/// {group_id, h, classes:[{id, label, order, q}], hasse_edges:[[upper, lower]]}
Json poset_json(const OrbitPoset& poset, const DegreeMap& q);
/// Hasse diagram with G/e on top; nodes of equal q share a rank.
std::string poset_dot(const OrbitPoset& poset, const DegreeMap& q);

/// F_n, delta(F_n) and the interval of each n in [0, [G:H]].
Json families_json(const OrbitPoset& poset, const DegreeMap& q);

Json lambda_class_json(const LambdaClass& lambda);
Json decomposition_json(const DecompositionReport& report);
Json mackey_json(const MackeyReport& report);
Json cross_effects_json(const PermGroup& g, const Subgroup& h, std::size_t n,
                        const std::vector<CrossEffectSummand>& summands);

Json descriptor_json(const LocalizationDescriptor& d);
Json tower_json(const TowerReport& report);
/// P_top -> ... -> P_0 as a chain, jumps marked.
std::string tower_dot(const TowerReport& report);
Json fracture_json(const FracturePlan& plan);
/// Both squares as tikzcd.
std::string fracture_tex(const FracturePlan& plan);
Json cpk_json(const CpkReport& report);
Json gamma_json(const GammaSplitTable& table);
Json gamma_tower_json(const GammaTowerDescriptors& d);
std::string gamma_tower_tex(const GammaTowerDescriptors& d);

Json sweep_json(const SweepResult& result, std::size_t max_listed = 50);

/// Indented "key: value" rendering of any document, used for --format text.
std::string json_to_text(const Json& doc);

}  // namespace normtower
