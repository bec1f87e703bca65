#include "polarikit/propagator.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace polarikit {

namespace {

constexpr std::complex<double> half_i{0.0, 0.5};

bool is_finite(std::complex<double> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

std::complex<double> singular_value() {
  const double inf = std::numeric_limits<double>::infinity();
  return {inf, inf};
}

// delta - rho * (k/k0)^2 common to every branch.
std::complex<double> kinetic_part(std::complex<double> delta, double kappa,
                                  const ModelParams& params) {
  const double kt = params.reduced_wavenumber(kappa);
  return delta - params.recoil_ratio * kt * kt;
}

GreenValue invert(GreenValue out, std::complex<double> bracket) {
  if (bracket == 0.0) {
    out.status = EvalStatus::on_pole;
    return out;
  }
  const std::complex<double> g = 1.0 / bracket;
  if (!is_finite(g)) {
    out.status = EvalStatus::on_pole;
    return out;
  }
  out.value = g;
  return out;
}

}  // namespace

std::complex<double> photon_pole_weight(std::complex<double> delta, double kappa,
                                        const ModelParams& params) {
  const double res = params.resonance_ratio;
  const std::complex<double> num = (res + delta) * (res + delta);
  const std::complex<double> cone =
      (delta - kappa) + std::complex<double>(0.0, params.light_cone_reg);
  return num / (cone * (2.0 * res + delta + kappa));
}

ComplexOutcome photon_pole_weight(double delta, double kappa,
                                  const ModelParams& params) {
  params.validate();
  ComplexOutcome out;
  if (params.light_cone_reg == 0.0 && delta == kappa) {
    out.status = EvalStatus::light_cone;
    return out;
  }
  out.value = photon_pole_weight(std::complex<double>(delta), kappa, params);
  if (!is_finite(out.value)) {
    // The only other real singularity is the counter-rotating photon line
    // 2R + delta + kappa = 0.
    out.value = {};
    out.status = EvalStatus::light_cone;
  }
  return out;
}

std::complex<double> transverse_bracket_with_weight(std::complex<double> delta,
                                                    double kappa,
                                                    std::complex<double> photon_weight,
                                                    const ModelParams& params) {
  params.validate();
  const Permittivity eps = permittivity(delta, params);
  if (eps.singular) return singular_value();
  const double shift = constants::pi * params.n_dimless;
  return kinetic_part(delta, kappa, params) + shift + half_i * eps.root -
         3.0 * shift * photon_weight;
}

std::complex<double> transverse_bracket(std::complex<double> delta, double kappa,
                                        const ModelParams& params) {
  params.validate();
  // With n = 0 the photon-pole term carries a zero prefactor; skip its
  // evaluation entirely so the free-gas bracket stays regular on the cone.
  std::complex<double> weight = 0.0;
  if (params.n_dimless > 0.0) {
    weight = photon_pole_weight(delta, kappa, params);
  }
  return transverse_bracket_with_weight(delta, kappa, weight, params);
}

std::complex<double> transverse_bracket_near_cone(std::complex<double> delta,
                                                  double kappa,
                                                  const ModelParams& params) {
  params.validate();
  const Permittivity eps = permittivity(delta, params);
  if (eps.singular) return singular_value();
  const double shift = constants::pi * params.n_dimless;
  const std::complex<double> cone =
      (delta - kappa) + std::complex<double>(0.0, params.light_cone_reg);
  return kinetic_part(delta, kappa, params) + shift + half_i * eps.root -
         3.0 * shift * params.resonance_ratio / (2.0 * cone);
}

std::complex<double> longitudinal_bracket(std::complex<double> delta, double kappa,
                                          const ModelParams& params) {
  params.validate();
  const Permittivity eps = permittivity(delta, params);
  if (eps.singular) return singular_value();
  const double shift = constants::pi * params.n_dimless;
  return kinetic_part(delta, kappa, params) - 2.0 * shift + half_i * eps.root;
}

std::complex<double> exciton_bracket(std::complex<double> delta,
                                     const ModelParams& params) {
  params.validate();
  const Permittivity eps = permittivity(delta, params);
  if (eps.singular) return singular_value();
  const double shift = constants::pi * params.n_dimless;
  return delta - 2.0 * shift + half_i * eps.root;
}

GreenValue g_transverse(double delta, double kappa, const ModelParams& params) {
  params.validate();
  GreenValue out{delta, kappa, {}, EvalStatus::ok};
  if (params.n_dimless == 0.0) {
    return invert(out, transverse_bracket_with_weight(delta, kappa, 0.0, params));
  }
  const ComplexOutcome weight = photon_pole_weight(delta, kappa, params);
  if (!weight.ok()) {
    out.status = weight.status;
    return out;
  }
  return invert(out,
                transverse_bracket_with_weight(delta, kappa, weight.value, params));
}

GreenValue g_longitudinal(double delta, double kappa, const ModelParams& params) {
  params.validate();
  GreenValue out{delta, kappa, {}, EvalStatus::ok};
  return invert(out, longitudinal_bracket(delta, kappa, params));
}

GreenValue g_exciton(double delta, const ModelParams& params) {
  params.validate();
  GreenValue out{delta, 0.0, {}, EvalStatus::ok};
  return invert(out, exciton_bracket(delta, params));
}

GreenTensor green_tensor(Vec3 khat, double delta, double kappa,
                         const ModelParams& params) {
  if (std::abs(norm(khat) - 1.0) > 1e-12) {
    throw std::invalid_argument("green_tensor: khat must be a unit vector");
  }
  GreenTensor out;
  out.khat = khat;

  const GreenValue gt = g_transverse(delta, kappa, params);
  const GreenValue gl = g_longitudinal(delta, kappa, params);
  if (!gt.ok() || !gl.ok()) {
    out.status = !gt.ok() ? gt.status : gl.status;
    return out;
  }

  const double k[3] = {khat.x, khat.y, khat.z};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double proj = k[i] * k[j];
      const double ortho = (i == j ? 1.0 : 0.0) - proj;
      out.components[i][j] = gl.value * proj + gt.value * ortho;
    }
  }
  return out;
}

}  // namespace polarikit
