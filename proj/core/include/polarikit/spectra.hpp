#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "polarikit/propagator.hpp"

namespace polarikit {

enum class Component { transverse, longitudinal };

struct SweepOptions {
  std::size_t cell_budget = 10'000'000;  // reject larger grids up front
  unsigned threads = 0;                  // 0 = hardware concurrency
};

// Dense Green's-function table over a (kappa, delta) grid, kappa-major.
struct SpectralSurface {
  Component component = Component::transverse;
  std::vector<double> kappa_grid;
  std::vector<double> delta_grid;
  std::vector<std::complex<double>> values;  // gamma * G per cell
  std::vector<EvalStatus> flags;
  ModelParams params;  // snapshot used for every cell

  std::size_t index(std::size_t ik, std::size_t id) const {
    return ik * delta_grid.size() + id;
  }
  std::complex<double> at(std::size_t ik, std::size_t id) const {
    return values[index(ik, id)];
  }
  EvalStatus flag_at(std::size_t ik, std::size_t id) const {
    return flags[index(ik, id)];
  }
};

// Evaluates the chosen component on the full tensor grid. Grids must be
// finite, non-empty and strictly increasing; grids larger than the cell
// budget are rejected (std::invalid_argument). Cells are independent, so the
// result is bit-identical for any worker count.
SpectralSurface sweep_surface(Component component,
                              std::span<const double> kappa_grid,
                              std::span<const double> delta_grid,
                              const ModelParams& params,
                              const SweepOptions& options = {});

enum class PoleStatus {
  converged,
  no_convergence,  // iteration budget exhausted; last iterate reported
  diverged,        // iterate or function value became non-finite
};

struct PoleResult {
  std::complex<double> pole{};
  double residual = 0.0;  // |bracket(pole)| at the reported point
  int iterations = 0;
  PoleStatus status = PoleStatus::no_convergence;
  bool converged() const { return status == PoleStatus::converged; }
};

// Damped Newton root search on a complex analytic function: central-difference
// derivative with step 1e-6 * max(|z|, 1), step halving while the residual
// does not decrease, secant fallback when the derivative estimate degenerates.
// Deterministic for fixed inputs. Convergence criterion: |f(z)| < tol.
PoleResult find_pole(const std::function<std::complex<double>(std::complex<double>)>& f,
                     std::complex<double> seed, double tol = 1e-10,
                     int max_iter = 60);

// Root of the chosen component's inverse propagator in complex delta at
// fixed kappa.
PoleResult find_pole(Component component, double kappa,
                     std::complex<double> seed, const ModelParams& params,
                     double tol = 1e-10, int max_iter = 60);

enum class BranchLabel { atom_like, photon_like };

// Continuation starting points: the free-gas root rho*(k/k0)^2 - i/2 for an
// atom-type branch, the light line kappa (pushed slightly below the real
// axis) for a photon-type branch.
std::complex<double> default_pole_seed(Component component, BranchLabel branch,
                                       double kappa, const ModelParams& params);

struct BranchPoint {
  double kappa = 0.0;
  std::complex<double> pole{};
  double residual = 0.0;
  int iterations = 0;
};

struct TraceOptions {
  double tol = 1e-10;
  int max_iter = 60;
  // Labeling: a branch is photon_like if |Re(pole) - kappa| / |kappa| stays
  // below slope_window at the traced point of largest |kappa| at or beyond
  // label_kappa_min; otherwise atom_like.
  double slope_window = 0.05;
  double label_kappa_min = 100.0;
  // Continuation guard: stop if consecutive poles jump further than
  // jump_factor * max(1, kappa_step).
  double jump_factor = 50.0;
};

struct DispersionBranch {
  Component component = Component::transverse;
  BranchLabel label = BranchLabel::atom_like;
  std::vector<BranchPoint> points;
  bool complete = true;     // false if the continuation stopped early
  std::string diagnostic;   // why, when complete == false
};

// Traces one pole branch from kappa_begin towards kappa_end in steps of
// kappa_step (> 0), reseeding each solve with the previous pole. On a failed
// solve or a continuation jump the branch is returned incomplete with the
// points found so far and a diagnostic.
DispersionBranch trace_dispersion(Component component, double kappa_begin,
                                  double kappa_end, double kappa_step,
                                  std::complex<double> seed,
                                  const ModelParams& params,
                                  const TraceOptions& options = {});

}  // namespace polarikit
