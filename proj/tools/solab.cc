// solab command line. Commands and their options come from the table in
// run.cc; this file only maps flags onto a RunConfig.

#include <iostream>
#include <map>
#include <memory>

#include <CLI11.hpp>

#include "solab/run.h"

using namespace solab;

namespace {

struct CommandOptions {
  CLI::App *app = nullptr;
  CommandSpec const *spec = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
};

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"solab: solubility and insolubility probabilities in permutation groups"};
  app.require_subcommand(0, 1);

  std::string config_path, save_path;
  std::uint64_t seed = 0;
  std::string output = "json", level = "desk";
  unsigned workers = 1;
  std::uint64_t samples = 0, exact_ceiling = 0;
  double confidence = 0.95;
  bool csv = false;

  auto *seed_opt = app.add_option("--seed", seed, "seed for every randomized quantity");
  auto *output_opt = app.add_option("--output", output, "json, csv or pretty");
  auto *csv_opt = app.add_flag("--csv", csv, "same as --output csv");
  auto *level_opt = app.add_option("--level", level, "smoke, desk or deep ceilings");
  auto *workers_opt = app.add_option("--workers", workers, "worker threads");
  auto *samples_opt = app.add_option("--samples", samples, "Monte Carlo sample count");
  auto *conf_opt = app.add_option("--confidence", confidence, "interval confidence level");
  auto *ceil_opt = app.add_option("--exact-ceiling", exact_ceiling,
                                  "largest population enumerated exactly");
  app.add_option("--config", config_path, "read a key = value run configuration");
  app.add_option("--save-config", save_path, "write the effective configuration and run");

  std::vector<std::unique_ptr<CommandOptions>> commands;
  std::map<std::string, CLI::App *> groups;
  for (auto const &spec : command_specs()) {
    auto cmd = std::make_unique<CommandOptions>();
    cmd->spec = &spec;
    CLI::App *parent = &app;
    std::string leaf = spec.name;
    if (auto space = spec.name.find(' '); space != std::string::npos) {
      auto group = spec.name.substr(0, space);
      leaf = spec.name.substr(space + 1);
      if (!groups.count(group)) {
        groups[group] = app.add_subcommand(group, "exhaustive counting verifications");
        groups[group]->require_subcommand(1);
        groups[group]->fallthrough();
      }
      parent = groups[group];
    }
    cmd->app = parent->add_subcommand(leaf, spec.help);
    cmd->app->fallthrough();
    for (auto const &p : spec.params) {
      if (p.flag) {
        cmd->app->add_flag("--" + p.name, cmd->flags[p.name], p.help);
        continue;
      }
      auto *o = cmd->app->add_option("--" + p.name, cmd->values[p.name], p.help);
      if (!p.default_value.empty())
        o->default_str(p.default_value);
    }
    commands.push_back(std::move(cmd));
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    RunConfig config;
    if (!config_path.empty())
      config = load_config(config_path);

    for (auto const &cmd : commands) {
      if (!cmd->app->parsed())
        continue;
      if (!config.command.empty() && config.command != cmd->spec->name)
        config.params.clear();
      config.command = cmd->spec->name;
      for (auto const &p : cmd->spec->params) {
        if (p.flag) {
          if (cmd->flags[p.name])
            config.params[p.name] = "true";
        } else if (cmd->app->count("--" + p.name)) {
          config.params[p.name] = cmd->values[p.name];
        }
      }
    }
    if (config.command.empty()) {
      std::cerr << app.help();
      return 2;
    }
    if (seed_opt->count())
      config.seed = seed;
    if (output_opt->count())
      config.output = parse_output(output);
    if (csv_opt->count() && csv)
      config.output = OutputFormat::csv;
    if (level_opt->count())
      config.level = parse_level(level);
    if (workers_opt->count())
      config.workers = workers;
    if (samples_opt->count())
      config.samples = samples;
    if (conf_opt->count())
      config.confidence = confidence;
    if (ceil_opt->count())
      config.exact_ceiling = exact_ceiling;

    if (!save_path.empty())
      save_config(config, save_path);

    auto outcome = run(config);
    std::cout << render(outcome, config);
    for (auto const &f : outcome.failures)
      std::cerr << "FAIL " << f << '\n';
    return exit_code(outcome);
  } catch (UsageError const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
