#include "normtower/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

namespace normtower::cli {

namespace fs = std::filesystem;

bool Config::operator==(const Config& other) const {
  return limits.group_order_cap == other.limits.group_order_cap &&
         limits.subgroup_enum_cap == other.limits.subgroup_enum_cap &&
         limits.enumeration_cap == other.limits.enumeration_cap && limits.gamma_cap == other.limits.gamma_cap &&
         sweep_seed == other.sweep_seed && coind_seed == other.coind_seed && format == other.format;
}

Json config_to_json(const Config& c) {
  return Json{{"caps",
               Json{{"group_order_cap", c.limits.group_order_cap},
                    {"subgroup_enum_cap", c.limits.subgroup_enum_cap},
                    {"enumeration_cap", c.limits.enumeration_cap},
                    {"gamma_cap", c.limits.gamma_cap}}},
              {"seeds", Json{{"sweep", c.sweep_seed}, {"coind", c.coind_seed}}},
              {"format", c.format}};
}

namespace {

const std::vector<std::string> kFormats = {"json", "text", "dot", "tex"};

void check_keys(const Json& obj, const std::vector<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::MalformedSpec, where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorKind::MalformedSpec, "unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
void read_unsigned(const Json& obj, const char* key, T& target, const std::string& where) {
  if (!obj.contains(key)) return;
  const Json& v = obj.at(key);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorKind::MalformedSpec, std::string(key) + " in " + where + " must be a non-negative integer");
  }
  target = v.get<T>();
}

}  // namespace

Config config_from_json(const Json& doc) {
  Config c;
  check_keys(doc, {"caps", "seeds", "format"}, "config");
  if (doc.contains("caps")) {
    const Json& caps = doc.at("caps");
    check_keys(caps, {"group_order_cap", "subgroup_enum_cap", "enumeration_cap", "gamma_cap"}, "caps");
    read_unsigned(caps, "group_order_cap", c.limits.group_order_cap, "caps");
    read_unsigned(caps, "subgroup_enum_cap", c.limits.subgroup_enum_cap, "caps");
    read_unsigned(caps, "enumeration_cap", c.limits.enumeration_cap, "caps");
    read_unsigned(caps, "gamma_cap", c.limits.gamma_cap, "caps");
  }
  if (doc.contains("seeds")) {
    const Json& seeds = doc.at("seeds");
    check_keys(seeds, {"sweep", "coind"}, "seeds");
    read_unsigned(seeds, "sweep", c.sweep_seed, "seeds");
    read_unsigned(seeds, "coind", c.coind_seed, "seeds");
  }
  if (doc.contains("format")) {
    const Json& f = doc.at("format");
    if (!f.is_string() || std::find(kFormats.begin(), kFormats.end(), f.get<std::string>()) == kFormats.end()) {
      throw Error(ErrorKind::MalformedSpec, "format must be one of json, text, dot, tex");
    }
    c.format = f.get<std::string>();
  }
  return c;
}

bool valid_group_id(const std::string& id) {
  if (id.empty() || id.size() > 64 || id.front() == '.') return false;
  return std::all_of(id.begin(), id.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '+' || ch == '.';
  });
}

namespace {

Json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::MalformedSpec, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::MalformedSpec, path.string() + ": " + e.what());
  }
}

void write_json_file(const fs::path& path, const Json& doc) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::MalformedSpec, "cannot write " + path.string());
    out << doc.dump(2) << "\n";
  }
  fs::rename(tmp, path);
}

}  // namespace

Workspace Workspace::resolve(const std::optional<std::string>& override_dir) {
  if (override_dir && !override_dir->empty()) return Workspace(*override_dir);
  if (const char* env = std::getenv(kWorkspaceEnv); env && *env) return Workspace(env);
  return Workspace(kDefaultWorkspace);
}

fs::path Workspace::group_path(const std::string& id) const { return dir_ / "groups" / (id + ".json"); }

Config Workspace::load_config() const {
  const fs::path path = dir_ / "config.json";
  if (!fs::exists(path)) return Config{};
  return config_from_json(read_json_file(path));
}

void Workspace::save_config(const Config& c) const { write_json_file(dir_ / "config.json", config_to_json(c)); }

std::vector<std::string> Workspace::group_ids() const {
  std::vector<std::string> ids;
  const fs::path dir = dir_ / "groups";
  if (!fs::is_directory(dir)) return ids;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") ids.push_back(entry.path().stem().string());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Workspace::has_group(const std::string& id) const {
  return valid_group_id(id) && fs::exists(group_path(id));
}

std::optional<PermGroup> Workspace::load_group(const std::string& id, const Limits& limits) const {
  if (!has_group(id)) return std::nullopt;
  PermGroup g = group_from_json(read_json_file(group_path(id)), limits);
  if (g.id() != id) {
    throw Error(ErrorKind::MalformedSpec, group_path(id).string() + " holds group '" + g.id() + "'");
  }
  return g;
}

fs::path Workspace::save_group(const PermGroup& g, bool replace) const {
  if (!valid_group_id(g.id())) throw Error(ErrorKind::MalformedSpec, "invalid group id '" + g.id() + "'");
  const fs::path path = group_path(g.id());
  if (!replace && fs::exists(path)) {
    throw Error(ErrorKind::MalformedSpec, "group '" + g.id() + "' is already defined in " + dir_.string());
  }
  write_json_file(path, group_to_json(g));
  return path;
}

namespace {

int exit_code_for(const Error& e) {
  if (e.is_cap_violation()) return kCap;
  switch (e.kind()) {
    case ErrorKind::MarkMismatch:
    case ErrorKind::IsoMismatch:
    case ErrorKind::IntervalViolation:
    case ErrorKind::InvariantViolation:
      return kVerification;
    default:
      return kUsage;
  }
}

struct Context {
  Workspace workspace;
  Config config;
  std::string format;
  std::ostream& out;
  std::ostream& err;

  const Limits& limits() const { return config.limits; }
};

using Renderer = std::function<std::string()>;

void emit(Context& ctx, const Json& doc, const Renderer& dot = {}, const Renderer& tex = {}) {
  if (ctx.format == "json") {
    ctx.out << doc.dump(2) << "\n";
  } else if (ctx.format == "text") {
    ctx.out << json_to_text(doc);
  } else if (ctx.format == "dot" && dot) {
    ctx.out << dot();
  } else if (ctx.format == "tex" && tex) {
    ctx.out << tex();
  } else {
    throw Error(ErrorKind::MalformedSpec, "this command has no " + ctx.format + " output");
  }
}

PermGroup resolve_group(const Context& ctx, const std::string& name) {
  if (!name.empty() && name.front() == '(') return build_group(GroupSpec{"", name, 0}, ctx.limits());
  if (auto g = ctx.workspace.load_group(name, ctx.limits())) return *g;
  return build_catalog_group(name, ctx.limits());
}

/// A copy of `g` carrying the id `id`.
PermGroup renamed(const PermGroup& g, const std::string& id, const Limits& limits) {
  return PermGroup::generate(id, g.degree(), g.generators(), limits);
}

// Option storage for every subcommand.
struct Args {
  std::optional<std::string> workspace;
  std::string format;

  std::string name, catalog, gens;
  std::size_t degree = 0;
  bool replace = false;
  bool subgroups = false;

  std::string config_key, config_value;

  std::string group;
  std::string h = "e";
  std::string k;
  std::vector<std::size_t> sizes;
  std::optional<std::uint64_t> random_seed;
  bool random = false;
  bool verify = false;
  std::size_t n = 0;
  std::size_t fk = 0, fm = 0, fn = 0;
  std::optional<std::size_t> gamma_k;
  bool lattice_route = false;
  std::size_t p = 0, cpk_k = 0;

  std::string scope;
  bool inject_fault = false;
  bool progress = false;
};

int cmd_group_define(Context& ctx, const Args& a) {
  if (!valid_group_id(a.name)) {
    throw Error(ErrorKind::MalformedSpec, "group names use letters, digits, '_', '-', '+' and '.'");
  }
  if (a.catalog.empty() == a.gens.empty()) {
    throw Error(ErrorKind::MalformedSpec, "give exactly one of --catalog and --gens");
  }
  const PermGroup built = build_group(GroupSpec{a.catalog, a.gens, a.degree}, ctx.limits());
  const PermGroup g = renamed(built, a.name, ctx.limits());
  const fs::path path = ctx.workspace.save_group(g, a.replace);
  Json doc = group_report_json(g, false, ctx.limits());
  doc["path"] = path.string();
  emit(ctx, doc);
  return kOk;
}

int cmd_group_list(Context& ctx) {
  Json groups = Json::array();
  for (const auto& id : ctx.workspace.group_ids()) {
    const auto g = ctx.workspace.load_group(id, ctx.limits());
    groups.push_back(Json{{"id", id}, {"degree", g->degree()}, {"order", g->order()}});
  }
  emit(ctx, Json{{"workspace", ctx.workspace.dir().string()}, {"groups", groups}});
  return kOk;
}

int cmd_group_show(Context& ctx, const Args& a) {
  emit(ctx, group_report_json(resolve_group(ctx, a.name), a.subgroups, ctx.limits()));
  return kOk;
}

int cmd_config_show(Context& ctx) {
  Json doc = config_to_json(ctx.config);
  doc["workspace"] = ctx.workspace.dir().string();
  emit(ctx, doc);
  return kOk;
}

int cmd_config_set(Context& ctx, const Args& a) {
  Json doc = config_to_json(ctx.config);
  Json* slot = &doc;
  std::istringstream path(a.config_key);
  for (std::string part; std::getline(path, part, '.');) {
    if (!slot->is_object() || !slot->contains(part)) {
      throw Error(ErrorKind::MalformedSpec, "unknown config key '" + a.config_key + "'");
    }
    slot = &(*slot)[part];
  }
  if (slot->is_object()) throw Error(ErrorKind::MalformedSpec, "'" + a.config_key + "' is a section");
  if (slot->is_number_unsigned()) {
    const std::string& v = a.config_value;
    if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorKind::MalformedSpec, "'" + a.config_key + "' takes a non-negative integer");
    }
    try {
      *slot = static_cast<std::uint64_t>(std::stoull(v));
    } catch (const std::out_of_range&) {
      throw Error(ErrorKind::MalformedSpec, "'" + v + "' is out of range");
    }
  } else {
    *slot = a.config_value;
  }
  ctx.config = config_from_json(doc);
  ctx.workspace.save_config(ctx.config);
  return cmd_config_show(ctx);
}

int cmd_doublecosets(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const Subgroup h = parse_subgroup(g, a.h);
  const Subgroup k = parse_subgroup(g, a.k.empty() ? a.h : a.k);
  emit(ctx, double_cosets_json(g, k, h));
  return kOk;
}

int cmd_poset(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const Subgroup h = parse_subgroup(g, a.h);
  const OrbitPoset poset = build_orbit_poset(g, ctx.limits());
  const DegreeMap q = degree_map(g, h, ctx.limits());
  emit(ctx, poset_json(poset, q), [&] { return poset_dot(poset, q); });
  return kOk;
}

int cmd_families(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const Subgroup h = parse_subgroup(g, a.h);
  const OrbitPoset poset = build_orbit_poset(g, ctx.limits());
  emit(ctx, families_json(poset, degree_map(g, h, ctx.limits())));
  return kOk;
}

int cmd_coind(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const Subgroup h = parse_subgroup(g, a.h);
  const PermGroup hg = h.as_group();
  const bool random = a.random || a.random_seed.has_value();
  const std::uint64_t seed = a.random_seed.value_or(ctx.config.coind_seed);
  std::vector<GSet> xs;
  for (std::size_t i = 0; i < a.sizes.size(); ++i) {
    if (random) {
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      xs.push_back(sample_gset_of_size(hg, rng, a.sizes[i]));
    } else {
      xs.push_back(GSet::trivial(hg, a.sizes[i]));
    }
  }
  const auto report = verify_coind_decomposition(g, h, xs, ctx.limits());
  Json doc = decomposition_json(report);
  doc["n"] = a.sizes.size();
  Json inputs = Json{{"mode", random ? "random" : "trivial"}, {"sizes", a.sizes}};
  if (random) inputs["seed"] = seed;
  doc["input_mode"] = inputs;
  emit(ctx, doc);
  return a.verify && !report.pass ? kVerification : kOk;
}

int cmd_crosseffect(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const Subgroup h = parse_subgroup(g, a.h);
  emit(ctx, cross_effects_json(g, h, a.n, cross_effect_summands(g, h, a.n, ctx.limits())));
  return kOk;
}

int cmd_tower(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const auto report = tower_report(g, parse_subgroup(g, a.h), ctx.limits());
  emit(ctx, tower_json(report), [&] { return tower_dot(report); });
  return kOk;
}

int cmd_fracture(Context& ctx, const Args& a) {
  const PermGroup g = resolve_group(ctx, a.group);
  const auto plan = fracture_plan(g, parse_subgroup(g, a.h), a.fk, a.fm, a.fn, ctx.limits());
  emit(ctx, fracture_json(plan), {}, [&] { return fracture_tex(plan); });
  return kOk;
}

int cmd_gamma(Context& ctx, const Args& a) {
  if (a.gamma_k) {
    const auto d = gamma_tower_descriptors(a.n, *a.gamma_k, ctx.limits());
    emit(ctx, gamma_tower_json(d), {}, [&] { return gamma_tower_tex(d); });
    return kOk;
  }
  const auto table = a.lattice_route ? gamma_splitting_by_lattice(a.n, ctx.limits()) : gamma_splitting(a.n, ctx.limits());
  Json doc = gamma_json(table);
  doc["method"] = a.lattice_route ? "lattice" : "sylow";
  emit(ctx, doc);
  return table.pass ? kOk : kVerification;
}

int cmd_cpk(Context& ctx, const Args& a) {
  const auto report = cpk_tower(a.p, a.cpk_k, ctx.limits());
  emit(ctx, cpk_json(report), [&] { return tower_dot(report.tower); });
  return report.pass ? kOk : kVerification;
}

void merge_into(SweepResult& into, const SweepResult& from) {
  for (const auto& s : from.suites) {
    auto& target = into.suite(s.name);
    target.pass += s.pass;
    target.fail += s.fail;
    target.skip += s.skip;
  }
  into.failures.insert(into.failures.end(), from.failures.begin(), from.failures.end());
  into.skips.insert(into.skips.end(), from.skips.begin(), from.skips.end());
  into.cases += from.cases;
}

int cmd_selftest(Context& ctx, const Args& a) {
  SweepConfig config;
  config.max_order = a.scope == "quick" ? 12 : 24;
  config.seed = ctx.config.sweep_seed;
  config.limits = ctx.config.limits;
  config.inject_fault = a.inject_fault;
  std::function<void(const std::string&)> progress;
  if (a.progress) progress = [&](const std::string& name) { ctx.err << "sweeping " << name << "\n" << std::flush; };
  SweepResult result = run_sweep(config, progress);
  merge_into(result, run_example_checks(ctx.config.limits));
  Json doc{{"scope", a.scope}, {"max_order", config.max_order}, {"seed", config.seed}};
  const Json summary = sweep_json(result);
  for (const auto& [key, value] : summary.items()) doc[key] = value;
  emit(ctx, doc);
  if (!result.pass()) {
    ctx.err << "selftest failed: " << result.failures.size() << " failure(s)\n";
    return kVerification;
  }
  return kOk;
}

void add_group_option(CLI::App* cmd, Args& a) {
  cmd->add_option("group", a.group, "Workspace group id, catalog name (C5, D4, S3, C2xC2) or generator list")
      ->required();
}

void add_h_option(CLI::App* cmd, Args& a) {
  cmd->add_option("--h", a.h, "Subgroup H: 'e', 'G' or generators such as \"(1 2)\"")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of the Goodwillie tower of the norm N_H^G", "normtower"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("--workspace", a.workspace, "Workspace directory (default $NORMTOWER_WORKSPACE or ./.normtower)");
  app.add_option("--format", a.format, "Output format; defaults to the workspace config")
      ->check(CLI::IsMember(kFormats));

  auto* group = app.add_subcommand("group", "Define, list and inspect groups");
  group->require_subcommand(1);
  group->fallthrough();
  auto* define = group->add_subcommand("define", "Store a group definition in the workspace");
  define->add_option("--name", a.name, "Group id")->required();
  define->add_option("--catalog", a.catalog, "Catalog name such as S3, C5, D4 or C2xC2");
  define->add_option("--gens", a.gens, "Generators in cycle notation, comma separated");
  define->add_option("--degree", a.degree, "Degree (default: largest point moved)");
  define->add_flag("--replace", a.replace, "Overwrite an existing definition");
  auto* list = group->add_subcommand("list", "List the workspace groups");
  auto* show = group->add_subcommand("show", "Show a group");
  show->add_option("name", a.name, "Group id or catalog name")->required();
  show->add_flag("--subgroups", a.subgroups, "Include the subgroup lattice");
  for (auto* sub : {define, list, show}) sub->fallthrough();

  auto* config = app.add_subcommand("config", "Show or change the workspace configuration");
  config->require_subcommand(1);
  config->fallthrough();
  auto* config_show = config->add_subcommand("show", "Print the configuration");
  auto* config_set = config->add_subcommand("set", "Set one key, e.g. caps.gamma_cap or seeds.sweep");
  config_set->add_option("key", a.config_key)->required();
  config_set->add_option("value", a.config_value)->required();
  for (auto* sub : {config_show, config_set}) sub->fallthrough();

  auto* doublecosets = app.add_subcommand("doublecosets", "Double cosets K\\G/H");
  add_group_option(doublecosets, a);
  add_h_option(doublecosets, a);
  doublecosets->add_option("--k", a.k, "Subgroup K (default: H)");

  auto* poset = app.add_subcommand("poset", "Orbit poset labelled by q_H");
  add_group_option(poset, a);
  add_h_option(poset, a);

  auto* families = app.add_subcommand("families", "The families F_n and their intervals");
  add_group_option(families, a);
  add_h_option(families, a);

  auto* coind = app.add_subcommand("coind", "Orbit decomposition of Coind_H^G(X1 + ... + Xn)");
  add_group_option(coind, a);
  add_h_option(coind, a);
  coind->add_option("--sizes", a.sizes, "Sizes of X1..Xn, comma separated")->delimiter(',')->required();
  coind->add_flag("--random", a.random, "Random H-sets seeded from the config");
  coind->add_option("--random-seed", a.random_seed, "Random H-sets with this seed");
  coind->add_flag("--verify", a.verify, "Exit 4 when the decomposition check fails");

  auto* crosseffect = app.add_subcommand("crosseffect", "Summands of the n-th cross effect");
  add_group_option(crosseffect, a);
  add_h_option(crosseffect, a);
  crosseffect->add_option("--n", a.n, "Arity")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));

  auto* tower = app.add_subcommand("tower", "Families, jump set and tower descriptors");
  add_group_option(tower, a);
  add_h_option(tower, a);

  auto* fracture = app.add_subcommand("fracture", "Fracture square plan for k <= m <= n");
  add_group_option(fracture, a);
  add_h_option(fracture, a);
  fracture->add_option("--k", a.fk)->required();
  fracture->add_option("--m", a.fm)->required();
  fracture->add_option("--n", a.fn)->required();

  auto* gamma = app.add_subcommand("gamma", "Splitting table of Gamma^n, or its tower square with --k");
  gamma->add_option("n", a.n, "Degree n of S_n")->required();
  gamma->add_option("--k", a.gamma_k, "Tower stage 1 <= k <= n");
  gamma->add_flag("--lattice", a.lattice_route, "Enumerate through the full subgroup lattice");

  auto* cpk = app.add_subcommand("cpk", "Tower of the norm from e to C_{p^k}");
  cpk->add_option("p", a.p, "Prime p")->required();
  cpk->add_option("k", a.cpk_k, "Exponent k >= 1")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the sweep suites and worked examples");
  selftest->add_option("scope", a.scope, "quick (orders <= 12) or full (orders <= 24)")
      ->required()
      ->check(CLI::IsMember({"quick", "full"}));
  selftest->add_flag("--inject-fault", a.inject_fault, "Corrupt one action table to exercise failure reporting");
  selftest->add_flag("--progress", a.progress, "Report each group on stderr");

  for (auto* sub : {doublecosets, poset, families, coind, crosseffect, tower, fracture, gamma, cpk, selftest}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    Context ctx{Workspace::resolve(a.workspace), {}, "", out, err};
    ctx.config = ctx.workspace.load_config();
    ctx.format = a.format.empty() ? ctx.config.format : a.format;

    if (define->parsed()) return cmd_group_define(ctx, a);
    if (list->parsed()) return cmd_group_list(ctx);
    if (show->parsed()) return cmd_group_show(ctx, a);
    if (config_show->parsed()) return cmd_config_show(ctx);
    if (config_set->parsed()) return cmd_config_set(ctx, a);
    if (doublecosets->parsed()) return cmd_doublecosets(ctx, a);
    if (poset->parsed()) return cmd_poset(ctx, a);
    if (families->parsed()) return cmd_families(ctx, a);
    if (coind->parsed()) return cmd_coind(ctx, a);
    if (crosseffect->parsed()) return cmd_crosseffect(ctx, a);
    if (tower->parsed()) return cmd_tower(ctx, a);
    if (fracture->parsed()) return cmd_fracture(ctx, a);
    if (gamma->parsed()) return cmd_gamma(ctx, a);
    if (cpk->parsed()) return cmd_cpk(ctx, a);
    if (selftest->parsed()) return cmd_selftest(ctx, a);
    err << "error: no command given\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace normtower::cli
