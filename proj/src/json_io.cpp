#include "normtower/json_io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace normtower {

namespace {

Json class_labels(const SubgroupLattice& lat, const ClassSet& classes) {
  Json out = Json::array();
  for (std::size_t c : classes) out.push_back(lat.class_label(c));
  return out;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

}  // namespace

Json group_to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const Perm& p : g.generators()) gens.push_back(p.cycles());
  return Json{{"id", g.id()}, {"degree", g.degree()}, {"generators", gens}};
}

PermGroup group_from_json(const Json& doc, const Limits& limits) {
  try {
    const std::string id = doc.at("id").get<std::string>();
    const std::size_t degree = doc.at("degree").get<std::size_t>();
    if (id.empty()) throw Error(ErrorKind::MalformedSpec, "group document has an empty id");
    std::vector<Perm> gens;
    for (const auto& text : doc.at("generators")) gens.push_back(parse_cycles(text.get<std::string>(), degree));
    return PermGroup::generate(id, degree, std::move(gens), limits);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, std::string("group document: ") + e.what());
  }
}

Json subgroup_json(const Subgroup& k) {
  return Json{{"generators", k.generator_string()}, {"order", k.order()}, {"name", structure_name(k)}};
}

Json group_report_json(const PermGroup& g, bool with_subgroups, const Limits& limits) {
  Json out = group_to_json(g);
  out["order"] = g.order();
  out["abelian"] = g.is_abelian();
  if (!with_subgroups) return out;
  const auto lat = g.lattice(limits);
  out["subgroup_count"] = lat.subgroup_count();
  out["class_count"] = lat.class_count();
  Json classes = Json::array();
  for (const auto& cls : lat.classes()) {
    classes.push_back(Json{{"id", cls.id()},
                           {"label", lat.class_label(cls.index)},
                           {"order", cls.order()},
                           {"conjugates", cls.class_size},
                           {"weyl_order", normalizer_quotient_order(g, cls.representative)},
                           {"generators", cls.representative.generator_string()}});
  }
  out["classes"] = classes;
  Json subs = Json::array();
  for (std::size_t i = 0; i < lat.subgroup_count(); ++i) {
    const Subgroup k = lat.subgroup(i);
    subs.push_back(Json{{"index", i},
                        {"class", lat.class_info(lat.class_of_subgroup(i)).id()},
                        {"order", k.order()},
                        {"generators", k.generator_string()}});
  }
  out["subgroups"] = subs;
  return out;
}

Json gset_to_json(const GSet& x) {
  Json points = Json::array();
  for (Point p = 0; p < x.size(); ++p) points.push_back(x.label(p));
  Json action = Json::object();
  const PermGroup& g = x.group();
  for (ElemId e = 0; e < g.order(); ++e) {
    Json row = Json::object();
    for (Point p = 0; p < x.size(); ++p) row[std::to_string(p)] = x.act(e, p);
    action[g.element(e).cycles()] = row;
  }
  return Json{{"group_id", g.id()}, {"points", points}, {"action", action}};
}

Json iso_class_to_json(const GSetIsoClass& c) {
  const auto lat = c.group.lattice();
  Json orbits = Json::array();
  for (std::size_t k = 0; k < c.multiplicity.size(); ++k) {
    if (c.multiplicity[k] == 0) continue;
    orbits.push_back(Json{{"stabilizer_class", lat.class_label(k)}, {"multiplicity", c.multiplicity[k]}});
  }
  return Json{{"group_id", c.group.id()}, {"orbits", orbits}};
}

Json double_cosets_json(const PermGroup& g, const Subgroup& k, const Subgroup& h) {
  Json list = Json::array();
  const auto dcs = double_cosets(g, k, h);
  for (const auto& dc : dcs) {
    list.push_back(Json{{"representative", g.element(dc.representative).cycles()}, {"size", dc.size}});
  }
  return Json{{"group_id", g.id()},
              {"k", subgroup_json(k)},
              {"h", subgroup_json(h)},
              {"count", dcs.size()},
              {"double_cosets", list}};
}

Json poset_json(const OrbitPoset& poset, const DegreeMap& q) {
  const auto& lat = poset.lattice();
  Json classes = Json::array();
  for (std::size_t c = 0; c < poset.size(); ++c) {
    classes.push_back(Json{{"id", lat.class_info(c).id()},
                           {"label", poset.label(c)},
                           {"order", lat.class_info(c).order()},
                           {"q", q(c)}});
  }
  Json edges = Json::array();
  for (const auto& [upper, lower] : poset.hasse_edges()) {
    edges.push_back(Json::array({lat.class_info(upper).id(), lat.class_info(lower).id()}));
  }
  return Json{{"group_id", poset.group().id()},
              {"h", subgroup_json(q.h)},
              {"classes", classes},
              {"hasse_edges", edges}};
}

std::string poset_dot(const OrbitPoset& poset, const DegreeMap& q) {
  const auto& lat = poset.lattice();
  std::ostringstream out;
  out << "digraph orbit_poset {\n  rankdir=TB;\n  node [shape=box];\n";
  std::map<std::size_t, std::vector<std::string>, std::greater<>> ranks;
  for (std::size_t c = 0; c < poset.size(); ++c) {
    const std::string id = lat.class_info(c).id();
    out << "  \"" << id << "\" [label=\"" << dot_escape(poset.label(c)) << "\\nq=" << q(c) << "\"];\n";
    ranks[q(c)].push_back(id);
  }
  for (const auto& [value, ids] : ranks) {
    out << "  { rank=same;";
    for (const auto& id : ids) out << " \"" << id << "\";";
    out << " }\n";
  }
  for (const auto& [upper, lower] : poset.hasse_edges()) {
    out << "  \"" << lat.class_info(upper).id() << "\" -> \"" << lat.class_info(lower).id() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

Json families_json(const OrbitPoset& poset, const DegreeMap& q) {
  const auto& lat = poset.lattice();
  Json list = Json::array();
  for (std::size_t n = 0; n <= q.index(); ++n) {
    const Family f = family_Fn(poset, q, n);
    const PosetInterval i = family_to_interval(f);
    list.push_back(Json{{"n", n},
                        {"family", class_labels(lat, f.classes)},
                        {"delta", to_string(delta(f, q))},
                        {"is_family", is_family(poset, f.classes)},
                        {"interval_roundtrip", interval_to_family(poset, i) == f}});
  }
  return Json{{"group_id", poset.group().id()}, {"h", subgroup_json(q.h)}, {"index", q.index()}, {"families", list}};
}

Json lambda_class_json(const LambdaClass& lambda) {
  const auto lat = lambda.group.lattice();
  const auto gl_lat = lambda.stabilizer.as_group().lattice();
  Json factors = Json::array();
  for (const auto& f : lambda.factors) {
    factors.push_back(Json{{"representative", lambda.group.element(f.representative).cycles()},
                           {"h_g", f.h_g.generator_string()},
                           {"h_g_order", f.h_g.order()},
                           {"h_g_class", gl_lat.class_label(f.h_g_class)},
                           {"index", f.index + 1}});
  }
  return Json{{"rep", lambda.representative_string()},
              {"code", lambda.code},
              {"image_size", lambda.image_size()},
              {"stabilizer_class", lat.class_label(lambda.stabilizer_class)},
              {"stabilizer_order", lambda.stabilizer.order()},
              {"stabilizer_generators", lambda.stabilizer.generator_string()},
              {"orbit_size", lambda.orbit_size},
              {"surjective", lambda.surjective},
              {"factors", factors}};
}

Json decomposition_json(const DecompositionReport& report) {
  Json inputs = Json::array();
  for (const auto& x : report.inputs) inputs.push_back(iso_class_to_json(x));
  Json classes = Json::array();
  for (const auto& e : report.entries) {
    Json c = lambda_class_json(e.lambda);
    c["f_lambda_size"] = e.f_lambda_size;
    c["induced"] = iso_class_to_json(e.induced);
    c["direct"] = iso_class_to_json(e.direct);
    c["matches"] = e.matches;
    classes.push_back(std::move(c));
  }
  Json totals{{"points", report.total.point_count()},
              {"coinduced", iso_class_to_json(report.total)},
              {"sum", iso_class_to_json(report.sum)},
              {"coinduced_text", report.total.to_string()},
              {"sum_text", report.sum.to_string()}};
  Json out{{"group_id", report.group.id()}, {"h", subgroup_json(report.h)}, {"n", report.entries.empty() ? 0 : report.entries.front().lambda.n},
           {"inputs", inputs}, {"classes", classes}, {"totals", totals}, {"verdict", verdict(report.pass)}};
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out;
}

Json mackey_json(const MackeyReport& report) {
  Json factors = Json::array();
  for (const auto& f : report.factors) {
    factors.push_back(Json{{"representative", report.group.element(f.representative).cycles()},
                           {"h_g", f.h_g.generator_string()},
                           {"h_g_order", f.h_g.order()},
                           {"size", f.size}});
  }
  return Json{{"group_id", report.group.id()},
              {"h", subgroup_json(report.h)},
              {"k", subgroup_json(report.k)},
              {"factors", factors},
              {"lhs", report.lhs.to_string()},
              {"rhs", report.rhs.to_string()},
              {"verdict", verdict(report.pass)}};
}

Json cross_effects_json(const PermGroup& g, const Subgroup& h, std::size_t n,
                        const std::vector<CrossEffectSummand>& summands) {
  Json list = Json::array();
  const auto lat = g.lattice();
  for (const auto& s : summands) {
    Json factors = Json::array();
    for (const auto& f : s.factors) {
      factors.push_back(Json{{"h_g", f.h_g_name}, {"input", f.input + 1}});
    }
    list.push_back(Json{{"rep", s.lambda.representative_string()},
                        {"stabilizer_class", lat.class_label(s.lambda.stabilizer_class)},
                        {"double_cosets", s.lambda.factors.size()},
                        {"factors", factors},
                        {"descriptor", s.descriptor}});
  }
  return Json{{"group_id", g.id()}, {"h", subgroup_json(h)}, {"n", n}, {"summands", list}};
}

Json descriptor_json(const LocalizationDescriptor& d) {
  if (d.zero) return Json{{"zero", true}, {"render", d.render()}};
  const auto lat = d.family_Iprime.group.lattice();
  return Json{{"zero", false},
              {"identity", d.is_identity()},
              {"family_Iprime", class_labels(lat, d.family_Iprime.classes)},
              {"family_Idoubleprime", class_labels(lat, d.family_Idoubleprime.classes)},
              {"render", d.render()}};
}

Json tower_json(const TowerReport& report) {
  const auto lat = report.group.lattice();
  Json q = Json::array();
  for (std::size_t c = 0; c < report.q.values.size(); ++c) {
    q.push_back(Json{{"class", "G/" + lat.class_label(c)}, {"q", report.q(c)}});
  }
  Json levels = Json::array();
  for (const auto& level : report.levels) {
    levels.push_back(Json{{"n", level.n},
                          {"family", class_labels(lat, level.family.classes)},
                          {"P_n", level.p_lower},
                          {"P^n", level.p_upper},
                          {"identity", level.truncation.is_identity()},
                          {"zero", level.truncation.zero}});
  }
  return Json{{"group_id", report.group.id()},
              {"h", subgroup_json(report.h)},
              {"top_degree", report.top_degree},
              {"jump_set", report.jump_set},
              {"descriptor_changes", descriptor_changes(report)},
              {"q", q},
              {"levels", levels}};
}

std::string tower_dot(const TowerReport& report) {
  std::ostringstream out;
  out << "digraph tower {\n  rankdir=TB;\n  node [shape=box];\n";
  for (std::size_t n = report.levels.size(); n-- > 0;) {
    out << "  \"P" << n << "\" [label=\"P_" << n << " = " << dot_escape(report.levels[n].p_lower) << "\"];\n";
  }
  for (std::size_t n = report.levels.size(); n-- > 1;) {
    const bool jump = std::binary_search(report.jump_set.begin(), report.jump_set.end(), n);
    out << "  \"P" << n << "\" -> \"P" << n - 1 << "\""
        << (jump ? " [style=bold, label=\"jump\"]" : " [style=dashed, label=\"=\"]") << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json fracture_json(const FracturePlan& plan) {
  const auto lat = plan.group.lattice();
  const OrbitPoset poset(plan.group);
  Json corners = Json::array();
  for (const auto& c : plan.corners) {
    corners.push_back(Json{{"position", c.position},
                           {"goodwillie", c.goodwillie},
                           {"equivariant", c.equivariant},
                           {"latex", c.equivariant_latex}});
  }
  Json violations = Json::array();
  for (const auto& v : plan.violations) violations.push_back(Json::array({poset.label(v.upper), poset.label(v.lower)}));
  return Json{{"group_id", plan.group.id()},
              {"h", subgroup_json(plan.h)},
              {"k", plan.k},
              {"m", plan.m},
              {"n", plan.n},
              {"intervals",
               Json{{"I", class_labels(lat, plan.interval.members)},
                    {"I1", class_labels(lat, plan.interval_1.members)},
                    {"I2", class_labels(lat, plan.interval_2.members)}}},
              {"goodwillie_families",
               Json{{"upper", class_labels(lat, plan.goodwillie_upper.classes)},
                    {"lower", class_labels(lat, plan.goodwillie_lower.classes)},
                    {"valid", plan.goodwillie_families_valid}}},
              {"corners", corners},
              {"hypothesis_check", Json{{"pass", plan.hypothesis_pass}, {"violations", violations}}}};
}

std::string fracture_tex(const FracturePlan& plan) {
  std::vector<std::string> goodwillie, equivariant;
  for (const auto& c : plan.corners) {
    std::string g = c.goodwillie;
    // "L_0 P_5 N" -> "L_{0} P_{5} N_H^G"
    std::string tex;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == '_') {
        std::size_t j = i + 1;
        while (j < g.size() && std::isdigit(static_cast<unsigned char>(g[j]))) ++j;
        tex += "_{" + g.substr(i + 1, j - i - 1) + "}";
        i = j - 1;
      } else if (g[i] == 'N' && i + 1 == g.size()) {
        tex += "N_H^G";
      } else {
        tex += g[i];
      }
    }
    goodwillie.push_back(tex);
    equivariant.push_back(c.equivariant_latex);
  }
  return "% Goodwillie side\n" + tikzcd_square(goodwillie) + "% equivariant side\n" + tikzcd_square(equivariant);
}

Json cpk_json(const CpkReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  return Json{{"p", report.p},
              {"k", report.k},
              {"tower", tower_json(report.tower)},
              {"checks", checks},
              {"verdict", verdict(report.pass)}};
}

Json gamma_json(const GammaSplitTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    rows.push_back(Json{{"class", r.name},
                        {"generators", r.representative.generator_string()},
                        {"order", r.order},
                        {"p", r.prime},
                        {"orbit_count", r.orbit_count},
                        {"weyl_order", r.weyl_order},
                        {"double_cosets", r.double_cosets},
                        {"identity_holds", r.identity_holds}});
  }
  return Json{{"n", table.n}, {"group_id", table.group.id()}, {"rows", rows}, {"verdict", verdict(table.pass)}};
}

Json gamma_tower_json(const GammaTowerDescriptors& d) {
  const auto lat = d.family_k.group.lattice();
  return Json{{"n", d.n},
              {"k", d.k},
              {"family_k", class_labels(lat, d.family_k.classes)},
              {"family_k_minus_1", class_labels(lat, d.family_k_minus_1.classes)},
              {"truncation", d.truncation},
              {"corners", d.corners},
              {"corners_latex", d.corners_latex}};
}

std::string gamma_tower_tex(const GammaTowerDescriptors& d) { return tikzcd_square(d.corners_latex); }

Json sweep_json(const SweepResult& result, std::size_t max_listed) {
  Json suites = Json::array();
  for (const auto& s : result.suites) {
    suites.push_back(Json{{"name", s.name}, {"pass", s.pass}, {"fail", s.fail}, {"skip", s.skip}});
  }
  auto events = [&](const std::vector<SweepEvent>& list) {
    Json out = Json::array();
    for (std::size_t i = 0; i < list.size() && i < max_listed; ++i) {
      const auto& e = list[i];
      Json item{{"suite", e.suite}, {"group", e.group}, {"h", e.h}, {"detail", e.detail}};
      if (!e.kind.empty()) item["kind"] = e.kind;
      if (e.count != 1) item["count"] = e.count;
      out.push_back(std::move(item));
    }
    return out;
  };
  return Json{{"groups", result.groups},
              {"cases", result.cases},
              {"suites", suites},
              {"failure_count", result.failures.size()},
              {"failures", events(result.failures)},
              {"skip_events", result.skips.size()},
              {"skips", events(result.skips)},
              {"verdict", verdict(result.pass())}};
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const Json& v) { return v.is_primitive(); });
}

void emit(const Json& v, int indent, std::ostringstream& out);

void emit_member(const std::string& key, const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_primitive()) {
    out << pad << key << ": " << scalar_text(v) << "\n";
  } else if (v.is_array() && all_scalars(v)) {
    out << pad << key << ": [";
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
    out << "]\n";
  } else {
    out << pad << key << ":\n";
    emit(v, indent + 2, out);
  }
}

void emit(const Json& v, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) emit_member(key, value, indent, out);
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (item.is_object() && !item.empty()) {
        std::ostringstream body;
        emit(item, indent + 2, body);
        out << pad << "- " << body.str().substr(static_cast<std::size_t>(indent) + 2);
      } else if (item.is_array() && all_scalars(item)) {
        out << pad << "- [";
        for (std::size_t i = 0; i < item.size(); ++i) out << (i ? ", " : "") << scalar_text(item[i]);
        out << "]\n";
      } else if (item.is_primitive()) {
        out << pad << "- " << scalar_text(item) << "\n";
      } else {
        out << pad << "-\n";
        emit(item, indent + 2, out);
      }
    }
  } else {
    out << pad << scalar_text(v) << "\n";
  }
}

}  // namespace

std::string json_to_text(const Json& doc) {
  std::ostringstream out;
  emit(doc, 0, out);
  return out.str();
}

}  // namespace normtower
