#pragma once

/**
 * @file run.h
 * @brief Command dispatch behind the solab CLI.
 *
 * A RunConfig names a command and its parameters and fully determines the
 * report body. Configs round-trip through a key = value text format whose
 * keys are the long flag names, e.g.
 *
 *     command = verify facile
 *     seed = 7
 *     n-max = 9
 */

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "solab/report.h"

namespace solab {

inline constexpr char const *artifact_version = "0.1.0";

enum class OutputFormat { json, csv, pretty };
enum class Level { smoke, desk, deep };

OutputFormat parse_output(std::string_view s);
Level parse_level(std::string_view s);
char const *name(OutputFormat f);
char const *name(Level l);

struct LevelPreset {
  std::size_t exhaustive_degree;
  std::uint64_t coset_ceiling;
};

/// smoke 6 / 10^3, desk 8 / 10^5, deep 9 / 5*10^5
LevelPreset preset(Level level);

struct ParamSpec {
  std::string name;
  std::string help;
  std::string default_value; // empty: required unless flag
  bool flag = false;
  bool optional = false;
};

struct CommandSpec {
  std::string name; // "eta", "verify facile", ...
  std::string help;
  std::vector<ParamSpec> params;
};

std::vector<CommandSpec> const &command_specs();
CommandSpec const *find_command(std::string_view name);

struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::json;
  Level level = Level::desk;
  unsigned workers = 1;
  std::optional<std::uint64_t> samples;
  double confidence = 0.95;
  std::optional<std::uint64_t> exact_ceiling;
};

std::string to_text(RunConfig const &config);
/// Throws UsageError on malformed lines or values.
RunConfig parse_config(std::string_view text);
RunConfig load_config(std::string const &path);
void save_config(RunConfig const &config, std::string const &path);

/// Bad command line or config; exit code 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct RunOutcome {
  std::string command;
  Json body;                         // deterministic given the config
  CsvTable table;
  std::vector<std::string> failures; // one line per failed check
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
  /// body plus status and the provenance block
  Json report(RunConfig const &config) const;
};

/// Throws UsageError for unknown commands or invalid parameters.
RunOutcome run(RunConfig const &config);

std::string render(RunOutcome const &outcome, RunConfig const &config);

/// 0 when every check passed, 1 otherwise.
int exit_code(RunOutcome const &outcome);

} // namespace solab
