#include "polarikit/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace polarikit {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

bool is_finite(std::complex<double> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

void check_grid(std::span<const double> grid, const char* name) {
  require(!grid.empty(), "sweep_surface: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::isfinite(grid[i])) {
      throw std::invalid_argument(std::string("sweep_surface: non-finite ") +
                                  name + " grid value");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string("sweep_surface: ") + name +
                                  " grid must be strictly increasing");
    }
  }
}

GreenValue eval_cell(Component component, double delta, double kappa,
                     const ModelParams& params) {
  return component == Component::transverse
             ? g_transverse(delta, kappa, params)
             : g_longitudinal(delta, kappa, params);
}

}  // namespace

SpectralSurface sweep_surface(Component component,
                              std::span<const double> kappa_grid,
                              std::span<const double> delta_grid,
                              const ModelParams& params,
                              const SweepOptions& options) {
  params.validate();
  check_grid(kappa_grid, "kappa");
  check_grid(delta_grid, "delta");
  const std::size_t nk = kappa_grid.size();
  const std::size_t nd = delta_grid.size();
  require(nk <= options.cell_budget / nd,
          "sweep_surface: grid exceeds the cell budget");

  SpectralSurface surface;
  surface.component = component;
  surface.kappa_grid.assign(kappa_grid.begin(), kappa_grid.end());
  surface.delta_grid.assign(delta_grid.begin(), delta_grid.end());
  surface.values.resize(nk * nd);
  surface.flags.resize(nk * nd);
  surface.params = params;

  unsigned workers = options.threads != 0
                         ? options.threads
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(
      std::min<std::size_t>(workers, nk));

  const auto run_rows = [&](std::size_t row_begin, std::size_t row_end) {
    for (std::size_t ik = row_begin; ik < row_end; ++ik) {
      const double kappa = surface.kappa_grid[ik];
      for (std::size_t id = 0; id < nd; ++id) {
        const GreenValue cell =
            eval_cell(component, surface.delta_grid[id], kappa, params);
        const std::size_t at = surface.index(ik, id);
        surface.values[at] = cell.value;
        surface.flags[at] = cell.status;
      }
    }
  };

  if (workers <= 1) {
    run_rows(0, nk);
    return surface;
  }

  // Static contiguous row partition; every cell is written exactly once, so
  // the result does not depend on the worker count.
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 0; w + 1 < workers; ++w) {
    const std::size_t lo = nk * w / workers;
    const std::size_t hi = nk * (w + 1) / workers;
    pool.emplace_back(run_rows, lo, hi);
  }
  run_rows(nk * (workers - 1) / workers, nk);
  for (auto& t : pool) t.join();
  return surface;
}

PoleResult find_pole(
    const std::function<std::complex<double>(std::complex<double>)>& f,
    std::complex<double> seed, double tol, int max_iter) {
  require(static_cast<bool>(f), "find_pole: empty function");
  require(is_finite(seed), "find_pole: seed must be finite");
  require(std::isfinite(tol) && tol > 0.0, "find_pole: tol must be > 0");
  require(max_iter >= 1, "find_pole: max_iter must be >= 1");

  PoleResult out;
  std::complex<double> z = seed;
  std::complex<double> fz = f(z);
  if (!is_finite(fz)) {
    out.pole = z;
    out.residual = std::numeric_limits<double>::infinity();
    out.status = PoleStatus::diverged;
    return out;
  }

  std::complex<double> z_prev = z;
  std::complex<double> fz_prev = fz;
  bool have_prev = false;

  for (int iter = 0; iter < max_iter; ++iter) {
    if (std::abs(fz) < tol) {
      out.pole = z;
      out.residual = std::abs(fz);
      out.iterations = iter;
      out.status = PoleStatus::converged;
      return out;
    }

    const double h = 1e-6 * std::max(std::abs(z), 1.0);
    std::complex<double> deriv = (f(z + h) - f(z - h)) / (2.0 * h);
    if ((!is_finite(deriv) || std::abs(deriv) < 1e-300) && have_prev &&
        z != z_prev) {
      deriv = (fz - fz_prev) / (z - z_prev);  // secant fallback
    }
    if (!is_finite(deriv) || std::abs(deriv) < 1e-300) {
      out.pole = z;
      out.residual = std::abs(fz);
      out.iterations = iter;
      out.status = PoleStatus::no_convergence;
      return out;
    }

    std::complex<double> step = -fz / deriv;
    if (!is_finite(step)) {
      out.pole = z;
      out.residual = std::abs(fz);
      out.iterations = iter;
      out.status = PoleStatus::diverged;
      return out;
    }

    // Step halving: accept the first trial that does not increase |f|;
    // failing all, keep the shortest finite trial to stay in motion.
    std::complex<double> z_new{};
    std::complex<double> fz_new{};
    bool accepted = false;
    for (int half = 0; half < 9; ++half) {
      z_new = z + step;
      fz_new = f(z_new);
      if (is_finite(z_new) && is_finite(fz_new) &&
          std::abs(fz_new) <= std::abs(fz)) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted && (!is_finite(z_new) || !is_finite(fz_new))) {
      out.pole = z;
      out.residual = std::abs(fz);
      out.iterations = iter;
      out.status = PoleStatus::diverged;
      return out;
    }

    z_prev = z;
    fz_prev = fz;
    have_prev = true;
    z = z_new;
    fz = fz_new;
    out.iterations = iter + 1;
  }

  out.pole = z;
  out.residual = std::abs(fz);
  out.status =
      std::abs(fz) < tol ? PoleStatus::converged : PoleStatus::no_convergence;
  return out;
}

PoleResult find_pole(Component component, double kappa,
                     std::complex<double> seed, const ModelParams& params,
                     double tol, int max_iter) {
  params.validate();
  require(std::isfinite(kappa), "find_pole: kappa must be finite");
  const auto bracket = [component, kappa, &params](std::complex<double> z) {
    return component == Component::transverse
               ? transverse_bracket(z, kappa, params)
               : longitudinal_bracket(z, kappa, params);
  };
  return find_pole(bracket, seed, tol, max_iter);
}

std::complex<double> default_pole_seed(Component component, BranchLabel branch,
                                       double kappa,
                                       const ModelParams& params) {
  params.validate();
  require(std::isfinite(kappa), "default_pole_seed: kappa must be finite");
  (void)component;
  if (branch == BranchLabel::photon_like) {
    const double push = std::max(10.0 * params.light_cone_reg, 1e-5);
    return {kappa, -push};
  }
  const double kt = params.reduced_wavenumber(kappa);
  return {params.recoil_ratio * kt * kt, -0.5};
}

DispersionBranch trace_dispersion(Component component, double kappa_begin,
                                  double kappa_end, double kappa_step,
                                  std::complex<double> seed,
                                  const ModelParams& params,
                                  const TraceOptions& options) {
  params.validate();
  require(std::isfinite(kappa_begin) && std::isfinite(kappa_end),
          "trace_dispersion: kappa range must be finite");
  require(std::isfinite(kappa_step) && kappa_step > 0.0,
          "trace_dispersion: kappa_step must be > 0");
  require(is_finite(seed), "trace_dispersion: seed must be finite");
  require(std::isfinite(options.tol) && options.tol > 0.0,
          "trace_dispersion: tol must be > 0");
  require(options.max_iter >= 1, "trace_dispersion: max_iter must be >= 1");
  require(options.jump_factor > 0.0, "trace_dispersion: jump_factor must be > 0");

  const double span = std::abs(kappa_end - kappa_begin);
  const double count_f = std::floor(span / kappa_step + 1e-9) + 1.0;
  require(count_f <= 1e6, "trace_dispersion: more than 1e6 trace points");
  const std::size_t count = static_cast<std::size_t>(count_f);
  const double direction = kappa_end >= kappa_begin ? 1.0 : -1.0;

  DispersionBranch branch;
  branch.component = component;
  branch.points.reserve(count);

  std::complex<double> next_seed = seed;
  for (std::size_t i = 0; i < count; ++i) {
    const double kappa = kappa_begin + direction * static_cast<double>(i) * kappa_step;
    const PoleResult result = find_pole(component, kappa, next_seed, params,
                                        options.tol, options.max_iter);
    if (!result.converged()) {
      branch.complete = false;
      branch.diagnostic =
          "pole solve failed at kappa = " + std::to_string(kappa) +
          (result.status == PoleStatus::diverged ? " (diverged)"
                                                 : " (no convergence)") +
          ", residual " + std::to_string(result.residual);
      break;
    }
    if (!branch.points.empty()) {
      const double jump = std::abs(result.pole - branch.points.back().pole);
      const double allowed = options.jump_factor * std::max(1.0, kappa_step);
      if (jump > allowed) {
        branch.complete = false;
        branch.diagnostic = "continuation jump at kappa = " +
                            std::to_string(kappa) + ": |pole step| = " +
                            std::to_string(jump) + " exceeds " +
                            std::to_string(allowed);
        break;
      }
    }
    branch.points.push_back(
        {kappa, result.pole, result.residual, result.iterations});
    next_seed = result.pole;
  }

  // Label at the traced point of largest |kappa| at or beyond the floor.
  const BranchPoint* anchor = nullptr;
  for (const BranchPoint& p : branch.points) {
    if (std::abs(p.kappa) < options.label_kappa_min) continue;
    if (anchor == nullptr || std::abs(p.kappa) > std::abs(anchor->kappa)) {
      anchor = &p;
    }
  }
  if (anchor != nullptr &&
      std::abs(anchor->pole.real() - anchor->kappa) <
          options.slope_window * std::abs(anchor->kappa)) {
    branch.label = BranchLabel::photon_like;
  } else {
    branch.label = BranchLabel::atom_like;
  }
  return branch;
}

}  // namespace polarikit
