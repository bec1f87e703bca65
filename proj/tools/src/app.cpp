#include "polarikit_cli/app.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "polarikit/errors.hpp"
#include "polarikit/version.hpp"

namespace polarikit::cli {

namespace {

constexpr std::array<const char*, 6> kSubcommandNames = {
    "epsilon", "sweep", "dispersion", "xsec", "diffxsec", "formfactor"};

// All options accept repeats with the last value winning, which is what lets
// explicit flags override config-file entries injected ahead of them.
CLI::Option* last_wins(CLI::Option* option) {
  return option->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
}

void add_output_options(CLI::App* sub, RunConfig& cfg, std::string& config_path) {
  last_wins(sub->add_option("--output", cfg.output,
                            "Output file (default <subcommand>.<format>)"));
  last_wins(sub->add_option("--format", cfg.format, "Output format: csv|json")
                ->transform(CLI::CheckedTransformer(
                    std::map<std::string, OutputFormat>{
                        {"csv", OutputFormat::csv}, {"json", OutputFormat::json}}))
                ->default_str("csv"));
  last_wins(sub->add_option(
      "--config", config_path,
      "Flat key = value file; explicit flags override its entries"));
}

void add_model_options(CLI::App* sub, RunConfig& cfg) {
  last_wins(sub->add_option("--density", cfg.density,
                            "Condensate density n0/k0^3")
                ->capture_default_str());
  last_wins(sub->add_option("--wavelength-nm", cfg.wavelength_nm,
                            "Resonance wavelength in nm")
                ->capture_default_str());
  last_wins(sub->add_option("--linewidth-mhz", cfg.linewidth_mhz,
                            "Natural linewidth gamma/2pi in MHz")
                ->capture_default_str());
  last_wins(sub->add_option("--mass-u", cfg.mass_u,
                            "Atomic mass in unified atomic mass units")
                ->capture_default_str());
  last_wins(sub->add_option("--resonance-ratio", cfg.resonance_ratio,
                            "Override omega0/gamma directly"));
  last_wins(sub->add_option("--recoil-ratio", cfg.recoil_ratio,
                            "Override the recoil shift in gamma directly"));
  last_wins(sub->add_option("--epsilon-mode", cfg.epsilon_mode,
                            "Background dielectric treatment: full|unity")
                ->transform(CLI::CheckedTransformer(
                    std::map<std::string, EpsilonMode>{
                        {"full", EpsilonMode::full},
                        {"unity", EpsilonMode::unity}}))
                ->default_str("full"));
  last_wins(sub->add_option("--light-cone-reg", cfg.light_cone_reg,
                            "Imaginary regulator on the photon line, in gamma")
                ->capture_default_str());
}

void add_component_option(CLI::App* sub, RunConfig& cfg) {
  last_wins(sub->add_option("--component", cfg.component,
                            "Spectral component: transverse|longitudinal")
                ->transform(CLI::CheckedTransformer(
                    std::map<std::string, Component>{
                        {"transverse", Component::transverse},
                        {"longitudinal", Component::longitudinal}}))
                ->default_str("transverse"));
}

void add_delta_axis(CLI::App* sub, RunConfig& cfg) {
  last_wins(sub->add_option("--delta-min", cfg.delta_min,
                            "Detuning axis start, in gamma")
                ->capture_default_str());
  last_wins(sub->add_option("--delta-max", cfg.delta_max,
                            "Detuning axis end, in gamma")
                ->capture_default_str());
  last_wins(sub->add_option("--delta-count", cfg.delta_count,
                            "Detuning sample count")
                ->capture_default_str());
}

void add_kappa_axis(CLI::App* sub, RunConfig& cfg) {
  last_wins(sub->add_option("--kappa-min", cfg.kappa_min,
                            "Reduced wave number axis start, in gamma")
                ->capture_default_str());
  last_wins(sub->add_option("--kappa-max", cfg.kappa_max,
                            "Reduced wave number axis end, in gamma")
                ->capture_default_str());
  last_wins(sub->add_option("--kappa-count", cfg.kappa_count,
                            "Wave number sample count")
                ->capture_default_str());
}

void add_cloud_options(CLI::App* sub, RunConfig& cfg) {
  last_wins(sub->add_option("--atoms", cfg.atoms,
                            "Atom count of the trapped cloud")
                ->capture_default_str());
  last_wins(sub->add_option("--tf-radius", cfg.tf_radius,
                            "Cloud radius in units of 1/k0")
                ->capture_default_str());
}

struct ConfigEntry {
  std::string key;
  std::string value;
};

// Flat `key = value` lines, '#' starts a comment, blank lines ignored.
// Returns false (with a message on stderr) on a malformed line.
bool read_config_file(const std::string& path, std::vector<ConfigEntry>& out) {
  std::ifstream file(path);
  if (!file) {
    std::cerr << "polarikit: error: cannot read config file '" << path << "'\n";
    return false;
  }
  std::string line;
  int lineno = 0;
  while (std::getline(file, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const auto strip = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      if (a == std::string::npos) return std::string();
      const auto b = s.find_last_not_of(" \t\r");
      return s.substr(a, b - a + 1);
    };
    if (strip(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      std::cerr << "polarikit: error: " << path << ":" << lineno
                << ": expected key = value\n";
      return false;
    }
    ConfigEntry entry{strip(line.substr(0, eq)), strip(line.substr(eq + 1))};
    if (entry.key.empty()) {
      std::cerr << "polarikit: error: " << path << ":" << lineno
                << ": empty key\n";
      return false;
    }
    if (entry.key == "config") {
      std::cerr << "polarikit: error: " << path << ":" << lineno
                << ": config files cannot chain other config files\n";
      return false;
    }
    out.push_back(std::move(entry));
  }
  return true;
}

std::string iso8601_utc_now() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// The data path P is written as P.tmp then renamed, so a crash can never
// leave a truncated artifact behind. The probe exercises exactly that
// temporary location before any computation starts.
void probe_writable(const std::string& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const fs::path target(path);
  const fs::path parent =
      target.has_parent_path() ? target.parent_path() : fs::path(".");
  if (!fs::is_directory(parent, ec)) {
    throw std::invalid_argument("output directory does not exist: " +
                                parent.string());
  }
  const fs::path probe = fs::path(path + ".tmp");
  {
    std::ofstream f(probe, std::ios::binary | std::ios::app);
    if (!f) {
      throw std::invalid_argument("output path not writable: " + path);
    }
  }
  fs::remove(probe, ec);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw std::runtime_error("cannot open '" + tmp + "' for writing");
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) {
      throw std::runtime_error("write failed on '" + tmp + "'");
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

ParseResult parse_cli(const std::vector<std::string>& args) {
  ParseResult result;
  RunConfig& cfg = result.config;
  std::string config_path;

  CLI::App app{
      "Polariton spectra, dispersion branches, and light-scattering cross "
      "sections of a cold atomic gas",
      "polarikit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  CLI::App* epsilon = app.add_subcommand(
      "epsilon", "Dielectric permittivity and refractive root over detuning");
  add_model_options(epsilon, cfg);
  add_delta_axis(epsilon, cfg);
  add_output_options(epsilon, cfg, config_path);
  epsilon->callback([&cfg] { cfg.subcommand = Subcommand::epsilon; });

  CLI::App* sweep = app.add_subcommand(
      "sweep", "Green's function surface over the (kappa, delta) plane");
  add_model_options(sweep, cfg);
  add_component_option(sweep, cfg);
  add_kappa_axis(sweep, cfg);
  add_delta_axis(sweep, cfg);
  last_wins(sweep->add_option("--threads", cfg.threads,
                              "Worker threads (0 = hardware concurrency)")
                ->capture_default_str());
  add_output_options(sweep, cfg, config_path);
  sweep->callback([&cfg] { cfg.subcommand = Subcommand::sweep; });

  CLI::App* dispersion = app.add_subcommand(
      "dispersion", "Trace one quasi-energy pole branch over kappa");
  add_model_options(dispersion, cfg);
  add_component_option(dispersion, cfg);
  last_wins(dispersion->add_option("--branch", cfg.branch,
                                   "Default seed family: atom|photon")
                ->transform(CLI::CheckedTransformer(
                    std::map<std::string, BranchSeed>{
                        {"atom", BranchSeed::atom},
                        {"photon", BranchSeed::photon}}))
                ->default_str("atom"));
  add_kappa_axis(dispersion, cfg);
  last_wins(dispersion->add_option("--seed-re", cfg.seed_re,
                                   "Explicit pole seed, real part"));
  last_wins(dispersion->add_option("--seed-im", cfg.seed_im,
                                   "Explicit pole seed, imaginary part"));
  last_wins(dispersion->add_option("--tol", cfg.tol,
                                   "Convergence bound on |bracket| at the pole")
                ->capture_default_str());
  last_wins(dispersion->add_option("--max-iter", cfg.max_iter,
                                   "Iteration budget per solve")
                ->capture_default_str());
  last_wins(dispersion->add_option("--jump-factor", cfg.jump_factor,
                                   "Continuation guard in units of the step")
                ->capture_default_str());
  add_output_options(dispersion, cfg, config_path);
  dispersion->callback([&cfg] { cfg.subcommand = Subcommand::dispersion; });

  CLI::App* xsec = app.add_subcommand(
      "xsec", "Extinction and integrated elastic cross sections over detuning");
  add_model_options(xsec, cfg);
  add_delta_axis(xsec, cfg);
  last_wins(xsec->add_option("--theta-panels", cfg.theta_panels,
                             "Polar quadrature panels (0 = automatic)")
                ->capture_default_str());
  last_wins(xsec->add_option("--phi-panels", cfg.phi_panels,
                             "Azimuthal quadrature panels (0 = automatic)")
                ->capture_default_str());
  last_wins(xsec->add_option("--rel-tol", cfg.quad_rel_tol,
                             "Relative acceptance for the angular integral")
                ->capture_default_str());
  add_output_options(xsec, cfg, config_path);
  xsec->callback([&cfg] { cfg.subcommand = Subcommand::xsec; });

  CLI::App* diffxsec = app.add_subcommand(
      "diffxsec",
      "Angular distribution of elastic scattering off a trapped cloud");
  add_model_options(diffxsec, cfg);
  last_wins(diffxsec->add_option("--delta", cfg.delta,
                                 "Probe detuning in gamma")
                ->capture_default_str());
  last_wins(diffxsec->add_option("--theta-min", cfg.theta_min,
                                 "Scattering angle start, radians")
                ->capture_default_str());
  last_wins(diffxsec->add_option("--theta-max", cfg.theta_max,
                                 "Scattering angle end, radians")
                ->capture_default_str());
  last_wins(diffxsec->add_option("--theta-count", cfg.theta_count,
                                 "Scattering angle sample count")
                ->capture_default_str());
  add_cloud_options(diffxsec, cfg);
  add_output_options(diffxsec, cfg, config_path);
  diffxsec->callback([&cfg] { cfg.subcommand = Subcommand::diffxsec; });

  CLI::App* formfactor = app.add_subcommand(
      "formfactor", "Structure amplitude of the trapped cloud over q");
  add_cloud_options(formfactor, cfg);
  last_wins(formfactor->add_option("--q-min", cfg.q_min,
                                   "Momentum transfer start, in k0")
                ->capture_default_str());
  last_wins(formfactor->add_option("--q-max", cfg.q_max,
                                   "Momentum transfer end, in k0")
                ->capture_default_str());
  last_wins(formfactor->add_option("--q-count", cfg.q_count,
                                   "Momentum transfer sample count")
                ->capture_default_str());
  last_wins(formfactor->add_option("--rel-tol", cfg.ff_rel_tol,
                                   "Relative acceptance for the radial integral")
                ->capture_default_str());
  add_output_options(formfactor, cfg, config_path);
  formfactor->callback([&cfg] { cfg.subcommand = Subcommand::formfactor; });

  if (args.empty()) {
    std::cerr << app.help();
    result.exit_code = 2;
    return result;
  }

  // Config-file entries become ordinary tokens injected right after the
  // subcommand name, ahead of the user's own flags, so the normal last-wins
  // option policy gives the command line precedence.
  std::vector<std::string> tokens = args;
  std::string file_from_cli;
  int config_mentions = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "--config") {
      if (i + 1 >= tokens.size()) {
        std::cerr << "polarikit: error: --config needs a file argument\n";
        result.exit_code = 2;
        return result;
      }
      file_from_cli = tokens[i + 1];
      ++config_mentions;
    } else if (tokens[i].rfind("--config=", 0) == 0) {
      file_from_cli = tokens[i].substr(9);
      ++config_mentions;
    }
  }
  if (config_mentions > 1) {
    std::cerr << "polarikit: error: --config given more than once\n";
    result.exit_code = 2;
    return result;
  }
  if (config_mentions == 1) {
    const auto sub_it =
        std::find_if(tokens.begin(), tokens.end(), [](const std::string& t) {
          return std::find_if(kSubcommandNames.begin(), kSubcommandNames.end(),
                              [&t](const char* n) { return t == n; }) !=
                 kSubcommandNames.end();
        });
    if (sub_it == tokens.end()) {
      std::cerr << "polarikit: error: --config requires a subcommand\n";
      result.exit_code = 2;
      return result;
    }
    CLI::App* sub = app.get_subcommand_no_throw(*sub_it);
    std::vector<ConfigEntry> entries;
    if (!sub || !read_config_file(file_from_cli, entries)) {
      result.exit_code = 2;
      return result;
    }
    for (const ConfigEntry& entry : entries) {
      if (!sub->get_option_no_throw("--" + entry.key)) {
        std::cerr << "polarikit: error: unknown key '" << entry.key
                  << "' in config file '" << file_from_cli << "' for '"
                  << *sub_it << "'\n";
        result.exit_code = 2;
        return result;
      }
    }
    std::vector<std::string> injected;
    injected.reserve(2 * entries.size());
    for (const ConfigEntry& entry : entries) {
      injected.push_back("--" + entry.key);
      injected.push_back(entry.value);
    }
    tokens.insert(std::next(sub_it), injected.begin(), injected.end());
  }

  std::reverse(tokens.begin(), tokens.end());
  try {
    app.parse(std::move(tokens));
  } catch (const CLI::CallForHelp& e) {
    result.exit_code = app.exit(e);
    return result;
  } catch (const CLI::CallForVersion& e) {
    result.exit_code = app.exit(e);
    return result;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    result.exit_code = 2;
    return result;
  }
  return result;
}

int run(const RunConfig& cfg) {
  cfg.validate();
  const std::string out_path = cfg.resolved_output();
  const std::string meta_path = out_path + ".meta.json";
  probe_writable(out_path);
  probe_writable(meta_path);

  nlohmann::json sidecar;
  sidecar["tool"] = "polarikit";
  sidecar["version"] = std::string(version());
  sidecar["run"] = cfg.to_json();

  const auto t0 = std::chrono::steady_clock::now();
  const auto finish = [&](const char* status, const nlohmann::json& diagnostic) {
    sidecar["status"] = status;
    sidecar["diagnostic"] = diagnostic;
    sidecar["wall_time_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    sidecar["finished_at"] = iso8601_utc_now();
    write_file_atomic(meta_path, sidecar.dump(2) + "\n");
  };

  try {
    CommandOutput out = execute(cfg);
    write_file_atomic(out_path, cfg.format == OutputFormat::csv
                                    ? out.table.to_csv()
                                    : out.table.to_json_text());
    sidecar["result"] = out.notes;
    finish("ok", nullptr);
    return 0;
  } catch (const NumericError& e) {
    finish("error", e.what());
    std::cerr << "polarikit: numerical failure: " << e.what() << "\n"
              << "polarikit: diagnostic saved to " << meta_path << "\n";
    return 1;
  }
}

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  ParseResult parsed = parse_cli(args);
  if (parsed.exit_code >= 0) return parsed.exit_code;
  try {
    return run(parsed.config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "polarikit: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "polarikit: error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace polarikit::cli
