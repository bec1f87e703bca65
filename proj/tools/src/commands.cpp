#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include "polarikit/polarikit.hpp"
#include "polarikit_cli/app.hpp"

namespace polarikit::cli {

namespace {

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    grid.push_back(lo);
    return grid;
  }
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (int i = 0; i < count; ++i) {
    grid.push_back(i + 1 == count ? hi : lo + step * static_cast<double>(i));
  }
  return grid;
}

const char* flag_name(EvalStatus status) {
  switch (status) {
    case EvalStatus::ok: return "ok";
    case EvalStatus::light_cone: return "lightcone";
    case EvalStatus::on_pole: return "pole";
  }
  return "?";
}

// POLARIKIT_THREADS caps the sweep worker count when it parses as a
// positive integer; other values are ignored.
unsigned env_thread_cap() {
  const char* raw = std::getenv("POLARIKIT_THREADS");
  if (!raw) return 0;
  char* end = nullptr;
  const long parsed = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || parsed <= 0) return 0;
  return static_cast<unsigned>(parsed);
}

CommandOutput run_epsilon(const RunConfig& cfg) {
  const ModelParams params = cfg.model();
  Table table({"delta", "eps_re", "eps_im", "sqrt_eps_re", "sqrt_eps_im"});
  for (double d : linspace(cfg.delta_min, cfg.delta_max, cfg.delta_count)) {
    const Permittivity eps = permittivity(d, params);
    table.add_row({d, eps.value.real(), eps.value.imag(), eps.root.real(),
                   eps.root.imag()});
  }
  return {std::move(table), {{"rows", cfg.delta_count}}};
}

CommandOutput run_sweep(const RunConfig& cfg) {
  const ModelParams params = cfg.model();
  const std::vector<double> kappa =
      linspace(cfg.kappa_min, cfg.kappa_max, cfg.kappa_count);
  const std::vector<double> delta =
      linspace(cfg.delta_min, cfg.delta_max, cfg.delta_count);

  SweepOptions options;
  options.threads = cfg.threads;
  if (const unsigned cap = env_thread_cap()) {
    options.threads = options.threads == 0 ? cap : std::min(options.threads, cap);
  }

  const SpectralSurface surface =
      sweep_surface(cfg.component, kappa, delta, params, options);

  Table table({"kappa", "delta", "re", "im", "flag"});
  for (std::size_t ik = 0; ik < kappa.size(); ++ik) {
    for (std::size_t id = 0; id < delta.size(); ++id) {
      const std::complex<double> g = surface.at(ik, id);
      table.add_row({kappa[ik], delta[id], g.real(), g.imag(),
                     flag_name(surface.flag_at(ik, id))});
    }
  }
  return {std::move(table),
          {{"rows", cfg.kappa_count * cfg.delta_count},
           {"component", to_string(cfg.component)}}};
}

CommandOutput run_dispersion(const RunConfig& cfg) {
  const ModelParams params = cfg.model();
  const double step =
      (cfg.kappa_max - cfg.kappa_min) / static_cast<double>(cfg.kappa_count - 1);

  std::complex<double> seed;
  if (cfg.seed_re) {
    seed = {*cfg.seed_re, *cfg.seed_im};
  } else {
    const BranchLabel label = cfg.branch == BranchSeed::atom
                                  ? BranchLabel::atom_like
                                  : BranchLabel::photon_like;
    seed = default_pole_seed(cfg.component, label, cfg.kappa_min, params);
  }

  TraceOptions options;
  options.tol = cfg.tol;
  options.max_iter = cfg.max_iter;
  options.jump_factor = cfg.jump_factor;

  const DispersionBranch branch = trace_dispersion(
      cfg.component, cfg.kappa_min, cfg.kappa_max, step, seed, params, options);
  if (!branch.complete) {
    throw NumericError("dispersion trace incomplete after " +
                       std::to_string(branch.points.size()) + " points: " +
                       branch.diagnostic);
  }

  Table table({"kappa", "pole_re", "pole_im", "residual", "iterations"});
  for (const BranchPoint& point : branch.points) {
    table.add_row({point.kappa, point.pole.real(), point.pole.imag(),
                   point.residual, point.iterations});
  }
  return {std::move(table),
          {{"rows", branch.points.size()},
           {"component", to_string(cfg.component)},
           {"label", branch.label == BranchLabel::photon_like ? "photon_like"
                                                              : "atom_like"}}};
}

CommandOutput run_xsec(const RunConfig& cfg) {
  const ModelParams params = cfg.model();
  AngularGrid grid;
  grid.theta_panels = cfg.theta_panels;
  grid.phi_panels = cfg.phi_panels;
  grid.rel_tol = cfg.quad_rel_tol;

  Table table({"delta", "sigma_ext", "sigma_elastic"});
  for (double d : linspace(cfg.delta_min, cfg.delta_max, cfg.delta_count)) {
    table.add_row({d, extinction_cross_section(d, params),
                   integrated_elastic(d, params, grid)});
  }
  return {std::move(table), {{"rows", cfg.delta_count}}};
}

CommandOutput run_diffxsec(const RunConfig& cfg) {
  const ModelParams params = cfg.model();
  const CondensateProfile cloud =
      CondensateProfile::thomas_fermi(cfg.atoms, cfg.tf_radius);

  // Fixed scattering frame: photon in along +z, linear polarization along y,
  // outgoing direction scanned through the x-z plane.
  const Vec3 k_in{0.0, 0.0, 1.0};
  const CVec3 e_in{{0.0, 0.0}, {1.0, 0.0}, {0.0, 0.0}};
  const double wavenumber = 1.0 + cfg.delta / params.resonance_ratio;

  Table table({"theta", "q", "dxsec"});
  for (double theta : linspace(cfg.theta_min, cfg.theta_max, cfg.theta_count)) {
    const Vec3 k_out{std::sin(theta), 0.0, std::cos(theta)};
    const double q = 2.0 * wavenumber * std::abs(std::sin(theta / 2.0));
    table.add_row({theta, q,
                   polarization_summed_cross_section(k_in, e_in, k_out,
                                                     cfg.delta, cloud, params)});
  }
  return {std::move(table),
          {{"rows", cfg.theta_count}, {"delta", cfg.delta}}};
}

CommandOutput run_formfactor(const RunConfig& cfg) {
  const CondensateProfile cloud =
      CondensateProfile::thomas_fermi(cfg.atoms, cfg.tf_radius);
  Table table({"q", "form_factor"});
  for (double q : linspace(cfg.q_min, cfg.q_max, cfg.q_count)) {
    table.add_row({q, form_factor(cloud, q, cfg.ff_rel_tol)});
  }
  return {std::move(table), {{"rows", cfg.q_count}}};
}

}  // namespace

CommandOutput execute(const RunConfig& cfg) {
  cfg.validate();
  switch (cfg.subcommand) {
    case Subcommand::epsilon: return run_epsilon(cfg);
    case Subcommand::sweep: return run_sweep(cfg);
    case Subcommand::dispersion: return run_dispersion(cfg);
    case Subcommand::xsec: return run_xsec(cfg);
    case Subcommand::diffxsec: return run_diffxsec(cfg);
    case Subcommand::formfactor: return run_formfactor(cfg);
  }
  throw std::invalid_argument("unhandled subcommand");
}

}  // namespace polarikit::cli
