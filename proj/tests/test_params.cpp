#include "polarikit/params.hpp"

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using namespace polarikit;

namespace {

// Reference ratios for the rubidium-87 D2 line, evaluated from the defining
// constants with extended-precision arithmetic.
constexpr double ref_resonance_ratio = 63354977.273630226;
constexpr double ref_recoil_ratio = 0.00062198171435186862;

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

}  // namespace

TEST_CASE("default parameters reproduce the rubidium D2 ratios") {
  const ModelParams params;
  CHECK(rel_err(params.resonance_ratio, ref_resonance_ratio) < 1e-12);
  CHECK(rel_err(params.recoil_ratio, ref_recoil_ratio) < 1e-12);
  // Coarse sanity anchors.
  CHECK(rel_err(params.resonance_ratio, 6.34e7) < 1e-3);
  CHECK(rel_err(params.recoil_ratio, 6.22e-4) < 1e-3);
  CHECK(params.n_dimless == 0.05);
  CHECK(params.light_cone_reg == 1e-6);
  CHECK(params.epsilon_mode == EpsilonMode::full);
  CHECK_NOTHROW(params.validate());
}

TEST_CASE("build_model reduces laboratory inputs to the dimensionless set") {
  const ModelParams built =
      build_model(constants::rb87_wavelength, constants::rb87_linewidth,
                  constants::rb87_mass, 0.05);
  CHECK(rel_err(built.resonance_ratio, constants::rb87_resonance_ratio) < 1e-15);
  CHECK(rel_err(built.recoil_ratio, constants::rb87_recoil_ratio) < 1e-15);
  CHECK(built.n_dimless == 0.05);

  // Scaling structure: halving the linewidth doubles both ratios.
  const ModelParams narrow =
      build_model(constants::rb87_wavelength, constants::rb87_linewidth / 2.0,
                  constants::rb87_mass, 0.05);
  CHECK(rel_err(narrow.resonance_ratio, 2.0 * built.resonance_ratio) < 1e-14);
  CHECK(rel_err(narrow.recoil_ratio, 2.0 * built.recoil_ratio) < 1e-14);

  // A heavier atom recoils less; the resonance ratio is mass-independent.
  const ModelParams heavy =
      build_model(constants::rb87_wavelength, constants::rb87_linewidth,
                  2.0 * constants::rb87_mass, 0.05);
  CHECK(rel_err(heavy.recoil_ratio, built.recoil_ratio / 2.0) < 1e-14);
  CHECK(heavy.resonance_ratio == built.resonance_ratio);

  CHECK_THROWS_AS(build_model(-780e-9, constants::rb87_linewidth,
                              constants::rb87_mass, 0.05),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_model(constants::rb87_wavelength, 0.0,
                              constants::rb87_mass, 0.05),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_model(constants::rb87_wavelength,
                              constants::rb87_linewidth, constants::rb87_mass,
                              -0.05),
                  std::invalid_argument);
}

TEST_CASE("validation rejects out-of-range fields") {
  ModelParams params;

  params.n_dimless = -1e-16;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.n_dimless = std::nan("");
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.n_dimless = 0.05;

  params.resonance_ratio = 0.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.resonance_ratio = ref_resonance_ratio;

  params.recoil_ratio = -1.0;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.recoil_ratio = ref_recoil_ratio;

  params.light_cone_reg = -1e-9;
  CHECK_THROWS_AS(params.validate(), std::invalid_argument);
  params.light_cone_reg = 0.0;  // zero regulator is legal
  CHECK_NOTHROW(params.validate());
}

TEST_CASE("reduced wave number") {
  ModelParams params;
  params.resonance_ratio = 10.0;
  CHECK(params.reduced_wavenumber(0.0) == 1.0);
  CHECK(params.reduced_wavenumber(10.0) == 2.0);
  CHECK(params.reduced_wavenumber(-10.0) == 0.0);
  CHECK(params.reduced_wavenumber(5.0) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("collective resonance shift") {
  CHECK(lorentz_lorenz_shift(0.0) == 0.0);
  CHECK(rel_err(lorentz_lorenz_shift(0.05), constants::pi * 0.05) < 1e-15);
  // Rounded anchor for the default density.
  CHECK(rel_err(lorentz_lorenz_shift(0.05), 0.15708) < 1e-4);
  CHECK(rel_err(lorentz_lorenz_shift(1.0), constants::pi) < 1e-15);
  CHECK_THROWS_AS(lorentz_lorenz_shift(-0.05), std::invalid_argument);
  CHECK_THROWS_AS(lorentz_lorenz_shift(std::nan("")), std::invalid_argument);
}
