#pragma once

#include <complex>

#include "polarikit/dielectric.hpp"
#include "polarikit/linalg.hpp"
#include "polarikit/params.hpp"

namespace polarikit {

enum class EvalStatus {
  ok,
  light_cone,  // unregularised evaluation exactly on the photon line
  on_pole,     // inverse propagator vanished at this real point
};

struct ComplexOutcome {
  std::complex<double> value{};
  EvalStatus status = EvalStatus::ok;
  bool ok() const { return status == EvalStatus::ok; }
};

// Photon-pole weight W = omega^2 / (omega^2 - c^2 k^2), reduced to
//
//   W(delta, kappa) = (R + delta)^2 / (((delta - kappa) + i*eta) * (2R + delta + kappa))
//
// with R the resonance ratio and eta the light-cone regulator. The difference
// delta - kappa is formed directly; with eta = 0 an evaluation exactly on the
// light cone is reported as light_cone instead of producing a non-finite value.
ComplexOutcome photon_pole_weight(double delta, double kappa,
                                  const ModelParams& params);

// Analytic continuation in delta; keeps the same +i*eta term. Off the real
// axis the photon line is never hit, so no status is needed.
std::complex<double> photon_pole_weight(std::complex<double> delta, double kappa,
                                        const ModelParams& params);

// Inverse propagators (all in units of gamma, as functions of complex delta).
// The transverse bracket is
//
//   D_t = delta - rho*(k/k0)^2 + pi*n + (i/2) sqrt(eps) - 3*pi*n * W
//
// the longitudinal one replaces  +pi*n - 3*pi*n*W  by  -2*pi*n  (no photon
// pole couples to a longitudinal mode), and the exciton bracket is the k -> 0
// static limit of the transverse one, where W -> 1 exactly.
std::complex<double> transverse_bracket(std::complex<double> delta, double kappa,
                                        const ModelParams& params);
std::complex<double> longitudinal_bracket(std::complex<double> delta, double kappa,
                                          const ModelParams& params);
std::complex<double> exciton_bracket(std::complex<double> delta,
                                     const ModelParams& params);

// Transverse bracket with the photon-pole weight supplied by the caller
// instead of evaluated from (delta, kappa). Lets one probe the collective
// structure with the photon pole switched off (weight 0) or pinned to its
// static limit (weight 1).
std::complex<double> transverse_bracket_with_weight(std::complex<double> delta,
                                                    double kappa,
                                                    std::complex<double> photon_weight,
                                                    const ModelParams& params);

// Near-cone approximant: the photon-pole term is replaced by its leading
// behaviour 3*pi*n*R / (2*((delta - kappa) + i*eta)), which turns the
// transverse pole condition into an exact quadratic in delta.
std::complex<double> transverse_bracket_near_cone(std::complex<double> delta,
                                                  double kappa,
                                                  const ModelParams& params);

struct GreenValue {
  double delta = 0.0;
  double kappa = 0.0;
  std::complex<double> value{};  // gamma * G, dimensionless
  EvalStatus status = EvalStatus::ok;
  bool ok() const { return status == EvalStatus::ok; }
};

// Scalar Green's functions gamma*G = 1/bracket at a real spectral point.
// A vanishing bracket is reported as on_pole (value left at 0), an exact
// unregularised light-cone hit as light_cone; results are never non-finite.
GreenValue g_transverse(double delta, double kappa, const ModelParams& params);
GreenValue g_longitudinal(double delta, double kappa, const ModelParams& params);
GreenValue g_exciton(double delta, const ModelParams& params);

struct GreenTensor {
  Vec3 khat;
  Mat3c components{};  // gamma * G_ij
  EvalStatus status = EvalStatus::ok;
  bool ok() const { return status == EvalStatus::ok; }
};

// Full 3x3 tensor G_ij = G_l khat_i khat_j + G_t (delta_ij - khat_i khat_j)
// for a unit direction khat (|khat| must be 1 within 1e-12). If either scalar
// evaluation degrades, the worse status is reported and the tensor is zeroed.
GreenTensor green_tensor(Vec3 khat, double delta, double kappa,
                         const ModelParams& params);

}  // namespace polarikit
