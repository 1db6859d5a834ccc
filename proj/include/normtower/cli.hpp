#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "normtower/json_io.hpp"

namespace normtower::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kCap = 3,
  kVerification = 4,
};

/// Environment variable that overrides the workspace directory.
inline constexpr const char* kWorkspaceEnv = "NORMTOWER_WORKSPACE";
inline constexpr const char* kDefaultWorkspace = ".normtower";

struct Config {
  Limits limits;
  std::uint64_t sweep_seed = 20240601;
  std::uint64_t coind_seed = 1;
  std::string format = "json";

  bool operator==(const Config& other) const;
};

Json config_to_json(const Config& c);
/// Missing keys take their defaults; unknown keys and bad values throw MalformedSpec.
Config config_from_json(const Json& doc);

/// A directory holding groups/<id>.json and config.json.
class Workspace {
 public:
  explicit Workspace(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// `override_dir` if given, else $NORMTOWER_WORKSPACE, else ./.normtower.
  static Workspace resolve(const std::optional<std::string>& override_dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path group_path(const std::string& id) const;

  /// Defaults when config.json does not exist.
  Config load_config() const;
  void save_config(const Config& c) const;

  /// Sorted ids of the stored groups.
  std::vector<std::string> group_ids() const;
  bool has_group(const std::string& id) const;
  std::optional<PermGroup> load_group(const std::string& id, const Limits& limits) const;
  /// Writes groups/<id>.json; the id must be new unless `replace` is set.
  std::filesystem::path save_group(const PermGroup& g, bool replace) const;

 private:
  std::filesystem::path dir_;
};

/// Group ids double as file names: letters, digits, '_', '-', '+' and '.'.
bool valid_group_id(const std::string& id);

/// Runs one command line (without the program name). Everything the command
/// prints goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normtower::cli
