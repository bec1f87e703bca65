#pragma once

#include <complex>
#include <utility>

#include "polarikit/condensate.hpp"
#include "polarikit/linalg.hpp"
#include "polarikit/params.hpp"

namespace polarikit {

// One elastic photon-in / photon-out configuration. Directions are unit
// vectors, polarizations unit (possibly complex) vectors transverse to their
// wave vectors; both photons carry |k| = (1 + delta/R) k0.
struct ScatteringGeometry {
  Vec3 k_in_hat{0.0, 0.0, 1.0};
  Vec3 k_out_hat{0.0, 0.0, 1.0};
  CVec3 e_in{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  CVec3 e_out{{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
  double delta = 0.0;

  // Momentum transfer |k_in - k_out| in units of k0: 2 (1 + delta/R) sin(theta/2).
  double momentum_transfer(const ModelParams& params) const;

  // Unit-norm and transversality checks to 1e-12; throws std::invalid_argument.
  void validate() const;
};

// Orthonormal real polarization pair transverse to khat (polar and azimuthal
// unit vectors; a fixed x/y pair when khat is along +-z).
std::pair<CVec3, CVec3> transverse_basis(Vec3 khat);

// Total attenuation cross section per atom, sigma * k0^2, from the imaginary
// part of the medium refractive index:
//
//   sigma_ext k0^2 = 2 (1 + delta/R) Im sqrt(eps) / n
//
// with the n -> 0 limit evaluated analytically (single-atom resonance shape,
// peak 6 pi on resonance).
double extinction_cross_section(double delta, const ModelParams& params);

// Elastic scattering amplitude in units of 1/k0,
//
//   a = (3/4) (1 + delta/R)^2 (e_out* . e_in) [gamma G_exc(delta)] F(q),
//
// with F the condensate structure amplitude at the geometry's momentum
// transfer. The profile-free overload is the unit-form-factor (F = 1)
// amplitude of one scatterer embedded in the same medium.
std::complex<double> elastic_amplitude(const ScatteringGeometry& geometry,
                                       const ModelParams& params);
std::complex<double> elastic_amplitude(const ScatteringGeometry& geometry,
                                       const CondensateProfile& profile,
                                       const ModelParams& params);

// d sigma / d Omega * k0^2 = |a|^2 for one fixed polarization pair.
double differential_cross_section(const ScatteringGeometry& geometry,
                                  const ModelParams& params);
double differential_cross_section(const ScatteringGeometry& geometry,
                                  const CondensateProfile& profile,
                                  const ModelParams& params);

// |a|^2 summed over an orthonormal outgoing-polarization pair, evaluated via
// the transverse projector: sum_pol |e_pol* . e_in|^2 = 1 - |k_out_hat . e_in|^2.
double polarization_summed_cross_section(Vec3 k_in_hat, const CVec3& e_in,
                                         Vec3 k_out_hat, double delta,
                                         const ModelParams& params);
double polarization_summed_cross_section(Vec3 k_in_hat, const CVec3& e_in,
                                         Vec3 k_out_hat, double delta,
                                         const CondensateProfile& profile,
                                         const ModelParams& params);

// Angular quadrature for the solid-angle integral: composite 8-point
// Gauss-Legendre product rule in (cos theta, phi). Zero panel counts pick
// defaults (single-atom: 16 theta panels; Thomas-Fermi: ceil(8 k R) to track
// the structure-amplitude oscillation, which is also the minimum accepted
// from a caller). The result is accepted only if doubling both panel counts
// moves it by less than rel_tol; otherwise QuadratureError.
struct AngularGrid {
  int theta_panels = 0;
  int phi_panels = 0;
  double rel_tol = 1e-6;
};

// Total elastic cross section sigma_el * k0^2: the polarization-summed
// differential cross section integrated over outgoing directions, with
// k_in = +z and a linear e_in = +x (the result is geometry-independent).
double integrated_elastic(double delta, const ModelParams& params,
                          const AngularGrid& grid = {});
double integrated_elastic(double delta, const CondensateProfile& profile,
                          const ModelParams& params, const AngularGrid& grid = {});

}  // namespace polarikit
