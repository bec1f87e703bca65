#include "polarikit/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "polarikit/dielectric.hpp"
#include "polarikit/errors.hpp"
#include "polarikit/propagator.hpp"

namespace polarikit {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

constexpr double unit_tol = 1e-12;

// 8-point Gauss-Legendre rule on [-1, 1].
constexpr double gl8_node[8] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};
constexpr double gl8_weight[8] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

void check_unit(Vec3 v, const char* message) {
  require(std::abs(norm(v) - 1.0) <= unit_tol, message);
}

void check_polarization(const CVec3& e, Vec3 khat, const char* message) {
  require(std::abs(norm(e) - 1.0) <= unit_tol, message);
  require(std::abs(dot(khat, e)) <= unit_tol, message);
}

// (1 + delta/R), the elastic photon frequency (and wave number) in units of
// omega0 (k0).
double reduced_frequency(double delta, const ModelParams& params) {
  return 1.0 + delta / params.resonance_ratio;
}

std::complex<double> exciton_green_checked(double delta,
                                           const ModelParams& params) {
  const GreenValue exc = g_exciton(delta, params);
  if (!exc.ok()) {
    throw NumericError("excitation propagator is singular at delta = " +
                       std::to_string(delta));
  }
  return exc.value;
}

}  // namespace

double ScatteringGeometry::momentum_transfer(const ModelParams& params) const {
  params.validate();
  return reduced_frequency(delta, params) * norm(k_in_hat - k_out_hat);
}

void ScatteringGeometry::validate() const {
  require(std::isfinite(delta), "scattering geometry: delta must be finite");
  check_unit(k_in_hat, "scattering geometry: k_in_hat must be a unit vector");
  check_unit(k_out_hat, "scattering geometry: k_out_hat must be a unit vector");
  check_polarization(e_in, k_in_hat,
                     "scattering geometry: e_in must be unit and transverse to k_in");
  check_polarization(e_out, k_out_hat,
                     "scattering geometry: e_out must be unit and transverse to k_out");
}

std::pair<CVec3, CVec3> transverse_basis(Vec3 khat) {
  check_unit(khat, "transverse_basis: khat must be a unit vector");
  const Vec3 zhat{0.0, 0.0, 1.0};
  if (std::abs(dot(khat, zhat)) > 1.0 - 1e-12) {
    return {to_complex(Vec3{1.0, 0.0, 0.0}), to_complex(Vec3{0.0, 1.0, 0.0})};
  }
  const Vec3 phi_hat = normalized(cross(zhat, khat));
  const Vec3 theta_hat = cross(phi_hat, khat);
  return {to_complex(theta_hat), to_complex(phi_hat)};
}

double extinction_cross_section(double delta, const ModelParams& params) {
  params.validate();
  require(std::isfinite(delta), "extinction_cross_section: delta must be finite");
  const double freq = reduced_frequency(delta, params);
  if (params.n_dimless == 0.0) {
    // Dilute limit: 3 pi (1 + delta/R) Im f(delta), the single-atom
    // resonance profile with peak 6 pi.
    return 3.0 * constants::pi * freq * 0.5 / (delta * delta + 0.25);
  }
  const Permittivity eps = permittivity(delta, params);
  return 2.0 * freq * eps.root.imag() / params.n_dimless;
}

namespace {

std::complex<double> amplitude_core(const ScatteringGeometry& geometry,
                                    double structure,
                                    const ModelParams& params) {
  const std::complex<double> green =
      exciton_green_checked(geometry.delta, params);
  const double freq = reduced_frequency(geometry.delta, params);
  return 0.75 * freq * freq * hdot(geometry.e_out, geometry.e_in) * green *
         structure;
}

}  // namespace

std::complex<double> elastic_amplitude(const ScatteringGeometry& geometry,
                                       const ModelParams& params) {
  params.validate();
  geometry.validate();
  return amplitude_core(geometry, 1.0, params);
}

std::complex<double> elastic_amplitude(const ScatteringGeometry& geometry,
                                       const CondensateProfile& profile,
                                       const ModelParams& params) {
  params.validate();
  geometry.validate();
  const double structure =
      form_factor(profile, geometry.momentum_transfer(params));
  return amplitude_core(geometry, structure, params);
}

double differential_cross_section(const ScatteringGeometry& geometry,
                                  const ModelParams& params) {
  return std::norm(elastic_amplitude(geometry, params));
}

double differential_cross_section(const ScatteringGeometry& geometry,
                                  const CondensateProfile& profile,
                                  const ModelParams& params) {
  return std::norm(elastic_amplitude(geometry, profile, params));
}

namespace {

double polarization_summed_core(Vec3 k_in_hat, const CVec3& e_in, Vec3 k_out_hat,
                                double delta, double structure,
                                const ModelParams& params) {
  const std::complex<double> green = exciton_green_checked(delta, params);
  const double freq = reduced_frequency(delta, params);
  const double pref = (9.0 / 16.0) * freq * freq * freq * freq *
                      std::norm(green) * structure * structure;
  // Sum over any orthonormal transverse pair equals the transverse projector
  // expectation 1 - |k_out_hat . e_in|^2; clamp the roundoff tail.
  const double overlap = std::norm(dot(k_out_hat, e_in));
  (void)k_in_hat;
  return pref * std::max(0.0, 1.0 - overlap);
}

void check_incoming(Vec3 k_in_hat, const CVec3& e_in, Vec3 k_out_hat,
                    double delta) {
  require(std::isfinite(delta),
          "polarization_summed_cross_section: delta must be finite");
  check_unit(k_in_hat, "polarization sum: k_in_hat must be a unit vector");
  check_unit(k_out_hat, "polarization sum: k_out_hat must be a unit vector");
  check_polarization(e_in, k_in_hat,
                     "polarization sum: e_in must be unit and transverse to k_in");
}

}  // namespace

double polarization_summed_cross_section(Vec3 k_in_hat, const CVec3& e_in,
                                         Vec3 k_out_hat, double delta,
                                         const ModelParams& params) {
  params.validate();
  check_incoming(k_in_hat, e_in, k_out_hat, delta);
  return polarization_summed_core(k_in_hat, e_in, k_out_hat, delta, 1.0, params);
}

double polarization_summed_cross_section(Vec3 k_in_hat, const CVec3& e_in,
                                         Vec3 k_out_hat, double delta,
                                         const CondensateProfile& profile,
                                         const ModelParams& params) {
  params.validate();
  check_incoming(k_in_hat, e_in, k_out_hat, delta);
  const double q =
      reduced_frequency(delta, params) * norm(k_in_hat - k_out_hat);
  const double structure = form_factor(profile, q);
  return polarization_summed_core(k_in_hat, e_in, k_out_hat, delta, structure,
                                  params);
}

namespace {

// One pass of the composite Gauss-Legendre product rule over the sphere with
// k_in = +z, e_in = +x. The structure amplitude depends on the polar angle
// only, so it is evaluated once per theta node.
double sphere_pass(double delta, const CondensateProfile* profile,
                   const ModelParams& params, int theta_panels, int phi_panels) {
  const std::complex<double> green = exciton_green_checked(delta, params);
  const double freq = reduced_frequency(delta, params);
  const double pref = (9.0 / 16.0) * freq * freq * freq * freq * std::norm(green);

  const double du = 2.0 / theta_panels;
  const double dphi = 2.0 * constants::pi / phi_panels;
  double total = 0.0;
  for (int ip = 0; ip < theta_panels; ++ip) {
    const double u_mid = -1.0 + (ip + 0.5) * du;
    for (int iu = 0; iu < 8; ++iu) {
      const double u = u_mid + 0.5 * du * gl8_node[iu];
      const double wu = 0.5 * du * gl8_weight[iu];
      const double sin2 = std::max(0.0, 1.0 - u * u);
      const double q = freq * std::sqrt(std::max(0.0, 2.0 - 2.0 * u));
      const double structure = profile ? form_factor(*profile, q) : 1.0;
      const double shape = pref * structure * structure;
      double phi_sum = 0.0;
      for (int jp = 0; jp < phi_panels; ++jp) {
        const double phi_mid = (jp + 0.5) * dphi;
        for (int jf = 0; jf < 8; ++jf) {
          const double phi = phi_mid + 0.5 * dphi * gl8_node[jf];
          const double wphi = 0.5 * dphi * gl8_weight[jf];
          const double cosphi = std::cos(phi);
          phi_sum += wphi * (1.0 - sin2 * cosphi * cosphi);
        }
      }
      total += wu * shape * phi_sum;
    }
  }
  return total;
}

double integrated_elastic_impl(double delta, const CondensateProfile* profile,
                               const ModelParams& params,
                               const AngularGrid& grid) {
  params.validate();
  require(std::isfinite(delta), "integrated_elastic: delta must be finite");
  require(std::isfinite(grid.rel_tol) && grid.rel_tol > 0.0,
          "integrated_elastic: rel_tol must be finite and > 0");
  require(grid.theta_panels >= 0 && grid.phi_panels >= 0,
          "integrated_elastic: panel counts must be >= 0");

  const double freq = reduced_frequency(delta, params);
  int theta = grid.theta_panels;
  int phi = grid.phi_panels > 0 ? grid.phi_panels : 2;
  if (profile) {
    // The kernel oscillates on the angular scale set by k R; require at
    // least 8 panels per unit of it.
    const int minimum = static_cast<int>(
        std::ceil(8.0 * std::abs(freq) * profile->tf_radius()));
    if (theta == 0) {
      theta = std::max(16, minimum);
    } else {
      require(theta >= minimum,
              "integrated_elastic: theta_panels below the resolution floor "
              "8*k*R for this profile");
    }
  } else if (theta == 0) {
    theta = 16;
  }

  const double coarse = sphere_pass(delta, profile, params, theta, phi);
  const double fine = sphere_pass(delta, profile, params, 2 * theta, 2 * phi);
  const double scale = std::max(std::abs(fine), 1e-300);
  if (!(std::abs(fine - coarse) <= grid.rel_tol * scale)) {
    throw QuadratureError(
        "integrated_elastic: angular quadrature unresolved (refinement moved "
        "the result by " +
        std::to_string(std::abs(fine - coarse) / scale) + " relative)");
  }
  return fine;
}

}  // namespace

double integrated_elastic(double delta, const ModelParams& params,
                          const AngularGrid& grid) {
  return integrated_elastic_impl(delta, nullptr, params, grid);
}

double integrated_elastic(double delta, const CondensateProfile& profile,
                          const ModelParams& params, const AngularGrid& grid) {
  require(profile.kind() == ProfileKind::thomas_fermi,
          "integrated_elastic: profile must be Thomas-Fermi");
  return integrated_elastic_impl(delta, &profile, params, grid);
}

}  // namespace polarikit
