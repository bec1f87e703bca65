#pragma once

#include <numbers>

namespace polarikit {

namespace constants {

inline constexpr double pi = std::numbers::pi_v<double>;

inline constexpr double hbar = 1.054571817e-34;                // J s
inline constexpr double speed_of_light = 299792458.0;          // m / s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg

// Rubidium-87 D2 line, the default atomic species.
inline constexpr double rb87_wavelength = 780e-9;                  // m
inline constexpr double rb87_linewidth = 2.0 * pi * 6.0666e6;      // rad / s
inline constexpr double rb87_mass = 86.909 * atomic_mass_unit;     // kg

// omega0 / gamma for the D2 line: ~6.3e7, the optical-to-decay frequency ratio.
inline constexpr double rb87_resonance_ratio =
    (2.0 * pi * speed_of_light / rb87_wavelength) / rb87_linewidth;

// hbar k0^2 / (2 m gamma): single-photon recoil in linewidth units, ~6.2e-4.
inline constexpr double rb87_recoil_ratio =
    hbar * (2.0 * pi / rb87_wavelength) * (2.0 * pi / rb87_wavelength) /
    (2.0 * rb87_mass * rb87_linewidth);

}  // namespace constants

// Local-field treatment of the background medium seen by a propagating photon.
enum class EpsilonMode {
  full,   // Lorentz-Lorenz dielectric function of the condensate
  unity,  // vacuum background (eps = 1), collective terms kept elsewhere
};

// Dimensionless model parameters.
//
// Every spectral quantity is measured in units of the natural linewidth gamma:
// detunings enter as delta = (omega - omega0)/gamma and wave numbers as
// kappa = (c k - omega0)/gamma. Densities are in atoms per (1/k0)^3 where
// k0 = omega0/c. delta - kappa is always formed directly from the two small
// numbers, never as a difference of absolute frequencies, so near-light-cone
// evaluations do not lose precision to cancellation.
struct ModelParams {
  double n_dimless = 0.05;          // n0 / k0^3
  double resonance_ratio = constants::rb87_resonance_ratio;  // omega0 / gamma
  double recoil_ratio = constants::rb87_recoil_ratio;        // hbar k0^2 / (2 m gamma)
  double light_cone_reg = 1e-6;     // +i eta regulator on the photon line, in gamma
  EpsilonMode epsilon_mode = EpsilonMode::full;

  // k/k0 for a mode of reduced wave number kappa.
  double reduced_wavenumber(double kappa) const {
    return 1.0 + kappa / resonance_ratio;
  }

  // Throws std::invalid_argument if any field is out of range or non-finite.
  void validate() const;
};

struct ModelOptions {
  EpsilonMode epsilon_mode = EpsilonMode::full;
  double light_cone_reg = 1e-6;
};

// Builds dimensionless parameters from laboratory inputs: wavelength in m,
// linewidth gamma in rad/s, mass in kg, density as n0/k0^3.
ModelParams build_model(double wavelength, double linewidth, double mass,
                        double n_dimless, const ModelOptions& options = {});

// Collective resonance shift pi * n_dimless of a uniform medium, in gamma.
// The longitudinal and transverse contact terms are -2 and +1 times this.
double lorentz_lorenz_shift(double n_dimless);

}  // namespace polarikit
