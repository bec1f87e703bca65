#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "polarikit_cli/run_config.hpp"
#include "polarikit_cli/table.hpp"

namespace polarikit::cli {

// Outcome of command-line parsing. exit_code < 0 means "proceed with
// config"; anything else is a finished invocation (help text already
// printed, or a usage/config-file error already reported on stderr).
struct ParseResult {
  int exit_code = -1;
  RunConfig config;
};

// Parses program arguments (argv[0] excluded). A config file named by
// --config is read as flat `key = value` lines (UTF-8, '#' comments); its
// entries are injected before the explicit flags so the command line wins.
// Unknown config keys and malformed lines are reported with exit code 2.
ParseResult parse_cli(const std::vector<std::string>& args);

// Computed data for one run: the table plus command-specific notes for the
// metadata sidecar (dispersion branch label, grid shapes, ...).
struct CommandOutput {
  Table table;
  nlohmann::json notes;
};

// Runs the configured computation. Throws std::invalid_argument for
// configuration problems and NumericError / QuadratureError for numerical
// failures; never writes files.
CommandOutput execute(const RunConfig& config);

// Full pipeline: validate, check output writability, compute, and write the
// data file and its `<output>.meta.json` sidecar atomically (temporary file
// plus rename). Returns 0 on success and 1 on numerical failure, in which
// case only the sidecar is written and it carries the diagnostic.
// std::invalid_argument (usage errors) propagates to the caller.
int run(const RunConfig& config);

// parse + run with all errors mapped to exit codes: 0 success, 1 numerical
// failure, 2 usage or configuration error.
int run_cli(int argc, const char* const* argv);

}  // namespace polarikit::cli
