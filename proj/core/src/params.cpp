#include "polarikit/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace polarikit {

namespace {

void require(bool cond, const std::string& message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

void ModelParams::validate() const {
  require(std::isfinite(n_dimless) && n_dimless >= 0.0,
          "n_dimless must be finite and >= 0");
  require(std::isfinite(resonance_ratio) && resonance_ratio > 0.0,
          "resonance_ratio must be finite and > 0");
  require(std::isfinite(recoil_ratio) && recoil_ratio >= 0.0,
          "recoil_ratio must be finite and >= 0");
  require(std::isfinite(light_cone_reg) && light_cone_reg >= 0.0,
          "light_cone_reg must be finite and >= 0");
}

ModelParams build_model(double wavelength, double linewidth, double mass,
                        double n_dimless, const ModelOptions& options) {
  require(std::isfinite(wavelength) && wavelength > 0.0,
          "wavelength must be finite and > 0");
  require(std::isfinite(linewidth) && linewidth > 0.0,
          "linewidth must be finite and > 0");
  require(std::isfinite(mass) && mass > 0.0, "mass must be finite and > 0");

  const double k0 = 2.0 * constants::pi / wavelength;
  const double omega0 = constants::speed_of_light * k0;

  ModelParams params;
  params.n_dimless = n_dimless;
  params.resonance_ratio = omega0 / linewidth;
  params.recoil_ratio = constants::hbar * k0 * k0 / (2.0 * mass * linewidth);
  params.epsilon_mode = options.epsilon_mode;
  params.light_cone_reg = options.light_cone_reg;
  params.validate();
  return params;
}

double lorentz_lorenz_shift(double n_dimless) {
  require(std::isfinite(n_dimless) && n_dimless >= 0.0,
          "n_dimless must be finite and >= 0");
  return constants::pi * n_dimless;
}

}  // namespace polarikit
