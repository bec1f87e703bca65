#include "polarikit_cli/run_config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarikit::cli {

const char* to_string(Subcommand sub) {
  switch (sub) {
    case Subcommand::epsilon: return "epsilon";
    case Subcommand::sweep: return "sweep";
    case Subcommand::dispersion: return "dispersion";
    case Subcommand::xsec: return "xsec";
    case Subcommand::diffxsec: return "diffxsec";
    case Subcommand::formfactor: return "formfactor";
  }
  return "?";
}

const char* to_string(OutputFormat format) {
  return format == OutputFormat::csv ? "csv" : "json";
}

const char* to_string(BranchSeed branch) {
  return branch == BranchSeed::atom ? "atom" : "photon";
}

const char* to_string(Component component) {
  return component == Component::transverse ? "transverse" : "longitudinal";
}

const char* to_string(EpsilonMode mode) {
  return mode == EpsilonMode::full ? "full" : "unity";
}

namespace {

[[noreturn]] void bad(const std::string& message) {
  throw std::invalid_argument(message);
}

void require(bool ok, const std::string& message) {
  if (!ok) bad(message);
}

Subcommand parse_subcommand(const std::string& s) {
  if (s == "epsilon") return Subcommand::epsilon;
  if (s == "sweep") return Subcommand::sweep;
  if (s == "dispersion") return Subcommand::dispersion;
  if (s == "xsec") return Subcommand::xsec;
  if (s == "diffxsec") return Subcommand::diffxsec;
  if (s == "formfactor") return Subcommand::formfactor;
  bad("unknown subcommand '" + s + "'");
}

OutputFormat parse_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  bad("unknown output format '" + s + "'");
}

BranchSeed parse_branch(const std::string& s) {
  if (s == "atom") return BranchSeed::atom;
  if (s == "photon") return BranchSeed::photon;
  bad("unknown branch '" + s + "'");
}

Component parse_component(const std::string& s) {
  if (s == "transverse") return Component::transverse;
  if (s == "longitudinal") return Component::longitudinal;
  bad("unknown component '" + s + "'");
}

EpsilonMode parse_epsilon_mode(const std::string& s) {
  if (s == "full") return EpsilonMode::full;
  if (s == "unity") return EpsilonMode::unity;
  bad("unknown epsilon mode '" + s + "'");
}

}  // namespace

ModelParams RunConfig::model() const {
  ModelParams params = build_model(
      wavelength_nm * 1e-9, 2.0 * constants::pi * linewidth_mhz * 1e6,
      mass_u * constants::atomic_mass_unit, density,
      ModelOptions{epsilon_mode, light_cone_reg});
  if (resonance_ratio) params.resonance_ratio = *resonance_ratio;
  if (recoil_ratio) params.recoil_ratio = *recoil_ratio;
  params.validate();
  return params;
}

std::string RunConfig::resolved_output() const {
  if (!output.empty()) return output;
  return std::string(to_string(subcommand)) + "." + to_string(format);
}

void RunConfig::validate() const {
  auto finite = [](double x) { return std::isfinite(x); };

  require(finite(density) && density >= 0.0, "--density must be >= 0");
  require(finite(wavelength_nm) && wavelength_nm > 0.0,
          "--wavelength-nm must be > 0");
  require(finite(linewidth_mhz) && linewidth_mhz > 0.0,
          "--linewidth-mhz must be > 0");
  require(finite(mass_u) && mass_u > 0.0, "--mass-u must be > 0");
  if (resonance_ratio) {
    require(finite(*resonance_ratio) && *resonance_ratio > 0.0,
            "--resonance-ratio must be > 0");
  }
  if (recoil_ratio) {
    require(finite(*recoil_ratio) && *recoil_ratio >= 0.0,
            "--recoil-ratio must be >= 0");
  }
  require(finite(light_cone_reg) && light_cone_reg >= 0.0,
          "--light-cone-reg must be >= 0");

  auto axis = [&](double lo, double hi, int count, const char* name) {
    require(finite(lo) && finite(hi), std::string(name) + " axis must be finite");
    require(count >= 1, std::string(name) + " count must be >= 1");
    require(lo <= hi, std::string(name) + " min must be <= max");
    if (count > 1) {
      require(lo < hi,
              std::string(name) + " min must be < max when count > 1");
    }
  };

  switch (subcommand) {
    case Subcommand::epsilon:
      axis(delta_min, delta_max, delta_count, "delta");
      break;
    case Subcommand::sweep:
      axis(kappa_min, kappa_max, kappa_count, "kappa");
      axis(delta_min, delta_max, delta_count, "delta");
      break;
    case Subcommand::dispersion:
      axis(kappa_min, kappa_max, kappa_count, "kappa");
      require(kappa_count >= 2, "dispersion needs --kappa-count >= 2");
      require(finite(tol) && tol > 0.0, "--tol must be > 0");
      require(max_iter >= 1, "--max-iter must be >= 1");
      require(finite(jump_factor) && jump_factor > 0.0,
              "--jump-factor must be > 0");
      require(seed_re.has_value() == seed_im.has_value(),
              "--seed-re and --seed-im must be given together");
      if (seed_re) {
        require(finite(*seed_re) && finite(*seed_im),
                "pole seed must be finite");
      }
      break;
    case Subcommand::xsec:
      axis(delta_min, delta_max, delta_count, "delta");
      require(theta_panels >= 0, "--theta-panels must be >= 0");
      require(phi_panels >= 0, "--phi-panels must be >= 0");
      require(finite(quad_rel_tol) && quad_rel_tol > 0.0,
              "--rel-tol must be > 0");
      break;
    case Subcommand::diffxsec:
      axis(theta_min, theta_max, theta_count, "theta");
      require(finite(delta), "--delta must be finite");
      require(finite(atoms) && atoms > 0.0, "--atoms must be > 0");
      require(finite(tf_radius) && tf_radius > 0.0, "--tf-radius must be > 0");
      break;
    case Subcommand::formfactor:
      axis(q_min, q_max, q_count, "q");
      require(q_min >= 0.0, "q min must be >= 0");
      require(finite(atoms) && atoms > 0.0, "--atoms must be > 0");
      require(finite(tf_radius) && tf_radius > 0.0, "--tf-radius must be > 0");
      require(finite(ff_rel_tol) && ff_rel_tol > 0.0, "--rel-tol must be > 0");
      break;
  }
}

nlohmann::json RunConfig::to_json() const {
  nlohmann::json j;
  j["subcommand"] = to_string(subcommand);
  j["density"] = density;
  j["wavelength-nm"] = wavelength_nm;
  j["linewidth-mhz"] = linewidth_mhz;
  j["mass-u"] = mass_u;
  if (resonance_ratio) j["resonance-ratio"] = *resonance_ratio;
  if (recoil_ratio) j["recoil-ratio"] = *recoil_ratio;
  j["epsilon-mode"] = to_string(epsilon_mode);
  j["light-cone-reg"] = light_cone_reg;
  j["delta-min"] = delta_min;
  j["delta-max"] = delta_max;
  j["delta-count"] = delta_count;
  j["kappa-min"] = kappa_min;
  j["kappa-max"] = kappa_max;
  j["kappa-count"] = kappa_count;
  j["q-min"] = q_min;
  j["q-max"] = q_max;
  j["q-count"] = q_count;
  j["theta-min"] = theta_min;
  j["theta-max"] = theta_max;
  j["theta-count"] = theta_count;
  j["delta"] = delta;
  j["component"] = to_string(component);
  j["branch"] = to_string(branch);
  j["tol"] = tol;
  j["max-iter"] = max_iter;
  j["jump-factor"] = jump_factor;
  if (seed_re) j["seed-re"] = *seed_re;
  if (seed_im) j["seed-im"] = *seed_im;
  j["theta-panels"] = theta_panels;
  j["phi-panels"] = phi_panels;
  j["rel-tol"] = quad_rel_tol;
  j["ff-rel-tol"] = ff_rel_tol;
  j["atoms"] = atoms;
  j["tf-radius"] = tf_radius;
  j["threads"] = threads;
  j["output"] = resolved_output();
  j["format"] = to_string(format);
  return j;
}

RunConfig RunConfig::from_json(const nlohmann::json& j) {
  RunConfig c;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "subcommand") {
        c.subcommand = parse_subcommand(value.get<std::string>());
      } else if (key == "density") {
        c.density = value.get<double>();
      } else if (key == "wavelength-nm") {
        c.wavelength_nm = value.get<double>();
      } else if (key == "linewidth-mhz") {
        c.linewidth_mhz = value.get<double>();
      } else if (key == "mass-u") {
        c.mass_u = value.get<double>();
      } else if (key == "resonance-ratio") {
        c.resonance_ratio = value.get<double>();
      } else if (key == "recoil-ratio") {
        c.recoil_ratio = value.get<double>();
      } else if (key == "epsilon-mode") {
        c.epsilon_mode = parse_epsilon_mode(value.get<std::string>());
      } else if (key == "light-cone-reg") {
        c.light_cone_reg = value.get<double>();
      } else if (key == "delta-min") {
        c.delta_min = value.get<double>();
      } else if (key == "delta-max") {
        c.delta_max = value.get<double>();
      } else if (key == "delta-count") {
        c.delta_count = value.get<int>();
      } else if (key == "kappa-min") {
        c.kappa_min = value.get<double>();
      } else if (key == "kappa-max") {
        c.kappa_max = value.get<double>();
      } else if (key == "kappa-count") {
        c.kappa_count = value.get<int>();
      } else if (key == "q-min") {
        c.q_min = value.get<double>();
      } else if (key == "q-max") {
        c.q_max = value.get<double>();
      } else if (key == "q-count") {
        c.q_count = value.get<int>();
      } else if (key == "theta-min") {
        c.theta_min = value.get<double>();
      } else if (key == "theta-max") {
        c.theta_max = value.get<double>();
      } else if (key == "theta-count") {
        c.theta_count = value.get<int>();
      } else if (key == "delta") {
        c.delta = value.get<double>();
      } else if (key == "component") {
        c.component = parse_component(value.get<std::string>());
      } else if (key == "branch") {
        c.branch = parse_branch(value.get<std::string>());
      } else if (key == "tol") {
        c.tol = value.get<double>();
      } else if (key == "max-iter") {
        c.max_iter = value.get<int>();
      } else if (key == "jump-factor") {
        c.jump_factor = value.get<double>();
      } else if (key == "seed-re") {
        c.seed_re = value.get<double>();
      } else if (key == "seed-im") {
        c.seed_im = value.get<double>();
      } else if (key == "theta-panels") {
        c.theta_panels = value.get<int>();
      } else if (key == "phi-panels") {
        c.phi_panels = value.get<int>();
      } else if (key == "rel-tol") {
        c.quad_rel_tol = value.get<double>();
      } else if (key == "ff-rel-tol") {
        c.ff_rel_tol = value.get<double>();
      } else if (key == "atoms") {
        c.atoms = value.get<double>();
      } else if (key == "tf-radius") {
        c.tf_radius = value.get<double>();
      } else if (key == "threads") {
        c.threads = value.get<unsigned>();
      } else if (key == "output") {
        c.output = value.get<std::string>();
      } else if (key == "format") {
        c.format = parse_format(value.get<std::string>());
      } else {
        bad("unknown key '" + key + "' in run configuration");
      }
    } catch (const nlohmann::json::exception&) {
      bad("bad value for key '" + key + "' in run configuration");
    }
  }
  return c;
}

}  // namespace polarikit::cli
