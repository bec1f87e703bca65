#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "polarikit/params.hpp"
#include "polarikit/spectra.hpp"

namespace polarikit::cli {

enum class Subcommand { epsilon, sweep, dispersion, xsec, diffxsec, formfactor };
enum class OutputFormat { csv, json };
enum class BranchSeed { atom, photon };

const char* to_string(Subcommand sub);
const char* to_string(OutputFormat format);
const char* to_string(BranchSeed branch);
const char* to_string(Component component);
const char* to_string(EpsilonMode mode);

// Everything one invocation needs, with the defaults the flags advertise.
// Unused axes keep their defaults; validate() applies the rules of the
// selected subcommand plus basic sanity on every field.
struct RunConfig {
  Subcommand subcommand = Subcommand::epsilon;

  // Atomic species and medium (defaults: rubidium D2 line, n/k0^3 = 0.05).
  double density = 0.05;
  double wavelength_nm = 780.0;
  double linewidth_mhz = 6.0666;
  double mass_u = 86.909;
  std::optional<double> resonance_ratio;  // direct omega0/gamma override
  std::optional<double> recoil_ratio;     // direct recoil/gamma override
  EpsilonMode epsilon_mode = EpsilonMode::full;
  double light_cone_reg = 1e-6;

  // Axes (each subcommand reads the ones it documents).
  double delta_min = -10.0;
  double delta_max = 10.0;
  int delta_count = 401;
  double kappa_min = -10.0;
  double kappa_max = 10.0;
  int kappa_count = 201;
  double q_min = 0.0;
  double q_max = 2.0;
  int q_count = 201;
  double theta_min = 0.0;
  double theta_max = 3.14159265358979324;
  int theta_count = 181;
  double delta = 0.0;  // fixed detuning for diffxsec

  // Spectral component and pole-trace controls.
  Component component = Component::transverse;
  BranchSeed branch = BranchSeed::atom;
  double tol = 1e-10;
  int max_iter = 60;
  double jump_factor = 50.0;
  std::optional<double> seed_re;
  std::optional<double> seed_im;

  // Angular quadrature (xsec) and radial quadrature (formfactor).
  int theta_panels = 0;  // 0 = library default
  int phi_panels = 0;
  double quad_rel_tol = 1e-6;
  double ff_rel_tol = 1e-8;

  // Condensate cloud (diffxsec, formfactor).
  double atoms = 1e5;
  double tf_radius = 40.0;

  unsigned threads = 0;  // sweep workers; 0 = hardware concurrency

  std::string output;  // empty = "<subcommand>.<format>"
  OutputFormat format = OutputFormat::csv;

  // Dimensionless model assembled from the laboratory inputs plus overrides.
  ModelParams model() const;

  std::string resolved_output() const;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  // Flag-name-keyed serialization; from_json(to_json(c)) reproduces c and
  // rejects unknown keys with std::invalid_argument.
  nlohmann::json to_json() const;
  static RunConfig from_json(const nlohmann::json& j);
};

}  // namespace polarikit::cli
