#include "polarikit/scattering.hpp"

#include <cmath>
#include <complex>

#include "doctest.h"
#include "polarikit/errors.hpp"
#include "polarikit/propagator.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace polarikit;
using std::complex;

namespace {

double rel_err(double got, double want) {
  return std::abs(got - want) / std::abs(want);
}

ModelParams free_params() {
  ModelParams p;
  p.n_dimless = 0.0;
  p.recoil_ratio = 0.0;
  return p;
}

ModelParams dense_params(EpsilonMode mode = EpsilonMode::full) {
  ModelParams p;
  p.n_dimless = 0.05;
  p.recoil_ratio = 0.0;
  p.epsilon_mode = mode;
  return p;
}

ScatteringGeometry forward_geometry(double delta = 0.0) {
  ScatteringGeometry g;
  g.k_in_hat = {0.0, 0.0, 1.0};
  g.k_out_hat = {0.0, 0.0, 1.0};
  g.e_in = to_complex(Vec3{1.0, 0.0, 0.0});
  g.e_out = to_complex(Vec3{1.0, 0.0, 0.0});
  g.delta = delta;
  return g;
}

// k_out in the x-z plane at polar angle theta, outgoing polarization in the
// scattering plane.
ScatteringGeometry planar_geometry(double theta, double delta = 0.0) {
  ScatteringGeometry g;
  g.k_in_hat = {0.0, 0.0, 1.0};
  g.k_out_hat = {std::sin(theta), 0.0, std::cos(theta)};
  g.e_in = to_complex(Vec3{1.0, 0.0, 0.0});
  g.e_out = to_complex(Vec3{std::cos(theta), 0.0, -std::sin(theta)});
  g.delta = delta;
  return g;
}

}  // namespace

TEST_CASE("geometry validation") {
  ScatteringGeometry g = forward_geometry();
  CHECK_NOTHROW(g.validate());

  g.k_out_hat = {0.0, 0.0, 1.0 + 1e-9};
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);

  g = forward_geometry();
  g.e_in = to_complex(Vec3{0.0, 0.0, 1.0});  // parallel to k
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);

  g = forward_geometry();
  g.e_out = {{0.5, 0.0}, {0.0, 0.0}, {0.0, 0.0}};  // not unit
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);

  g = forward_geometry();
  g.delta = std::nan("");
  CHECK_THROWS_AS(g.validate(), std::invalid_argument);

  // Circular polarization transverse to z is legal.
  g = forward_geometry();
  const double isq2 = 1.0 / std::sqrt(2.0);
  g.e_in = {{isq2, 0.0}, {0.0, isq2}, {0.0, 0.0}};
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("momentum transfer") {
  const ModelParams p = free_params();
  CHECK(forward_geometry().momentum_transfer(p) == 0.0);
  CHECK(rel_err(planar_geometry(constants::pi).momentum_transfer(p), 2.0) <
        1e-14);
  CHECK(rel_err(planar_geometry(constants::pi / 2.0).momentum_transfer(p),
                std::sqrt(2.0)) < 1e-14);
  // The elastic sphere radius scales with the photon frequency.
  const double delta = 1e6;
  const double scale = 1.0 + delta / p.resonance_ratio;
  CHECK(rel_err(planar_geometry(constants::pi, delta).momentum_transfer(p),
                2.0 * scale) < 1e-12);
}

TEST_CASE("extinction cross section") {
  SUBCASE("single-atom limit") {
    const ModelParams p = free_params();
    CHECK(rel_err(extinction_cross_section(0.0, p), 6.0 * constants::pi) <
          1e-14);
    // Lorentzian half-width at delta = +-1/2.
    CHECK(rel_err(extinction_cross_section(0.5, p),
                  3.0 * constants::pi * (1.0 + 0.5 / p.resonance_ratio)) < 1e-13);
    CHECK(rel_err(extinction_cross_section(-0.5, p),
                  3.0 * constants::pi * (1.0 - 0.5 / p.resonance_ratio)) < 1e-13);
  }

  SUBCASE("dilute limit is continuous") {
    ModelParams p = free_params();
    p.n_dimless = 1e-8;
    CHECK(rel_err(extinction_cross_section(0.0, p), 6.0 * constants::pi) < 1e-6);
    for (double delta : {-2.0, -0.3, 0.7}) {
      ModelParams zero = free_params();
      CHECK(rel_err(extinction_cross_section(delta, p),
                    extinction_cross_section(delta, zero)) < 1e-6);
    }
  }

  SUBCASE("frozen collective reference") {
    // n = 0.05 on resonance, evaluated from 2 (1 + delta/R) Im sqrt(eps) / n
    // with extended precision.
    const ModelParams p = dense_params();
    CHECK(rel_err(extinction_cross_section(0.0, p), 17.803531594160363) < 1e-12);
    CHECK(rel_err(extinction_cross_section(0.0, p), 17.81) < 1e-2);
  }

  SUBCASE("positive everywhere") {
    const ModelParams p = dense_params();
    for (double delta = -30.0; delta <= 30.0; delta += 0.61) {
      CHECK(extinction_cross_section(delta, p) > 0.0);
    }
  }
}

TEST_CASE("elastic amplitude structure") {
  SUBCASE("single scatterer on resonance") {
    const ModelParams p = free_params();
    const complex<double> a = elastic_amplitude(forward_geometry(), p);
    // (3/4) * (gamma G = -2i): modulus 3/2, differential cross section 9/4.
    CHECK(rel_err(std::abs(a), 1.5) < 1e-14);
    CHECK(rel_err(differential_cross_section(forward_geometry(), p), 2.25) <
          1e-14);
  }

  SUBCASE("crossed polarizations are dark") {
    const ModelParams p = free_params();
    ScatteringGeometry g = forward_geometry();
    g.e_out = to_complex(Vec3{0.0, 1.0, 0.0});
    CHECK(elastic_amplitude(g, p) == complex<double>{0.0, 0.0});
  }

  SUBCASE("amplitude is antilinear in e_out and linear in e_in phases") {
    const ModelParams p = dense_params();
    auto rng = testrand::make_rng(4511);
    for (int trial = 0; trial < 25; ++trial) {
      ScatteringGeometry g;
      g.k_in_hat = testrand::unit_vec3(rng);
      g.k_out_hat = testrand::unit_vec3(rng);
      g.e_in = testrand::transverse_pol(rng, g.k_in_hat);
      g.e_out = testrand::transverse_pol(rng, g.k_out_hat);
      g.delta = testrand::uniform(rng, -3.0, 3.0);
      const complex<double> base = elastic_amplitude(g, p);

      const complex<double> phase = std::polar(1.0, testrand::uniform(rng, 0.0, 6.28));
      ScatteringGeometry spun = g;
      spun.e_in = phase * g.e_in;
      CHECK(std::abs(elastic_amplitude(spun, p) - phase * base) <
            1e-13 * std::max(1.0, std::abs(base)));

      spun = g;
      spun.e_out = phase * g.e_out;
      CHECK(std::abs(elastic_amplitude(spun, p) - std::conj(phase) * base) <
            1e-13 * std::max(1.0, std::abs(base)));
    }
  }

  SUBCASE("amplitude is additive over polarization superpositions") {
    const ModelParams p = dense_params();
    auto rng = testrand::make_rng(62);
    const Vec3 khat{0.0, 0.0, 1.0};
    const CVec3 ex = to_complex(Vec3{1.0, 0.0, 0.0});
    const CVec3 ey = to_complex(Vec3{0.0, 1.0, 0.0});
    for (int trial = 0; trial < 10; ++trial) {
      const double mix = testrand::uniform(rng, 0.05, 0.95);
      const complex<double> c1 = std::sqrt(mix) *
                                 std::polar(1.0, testrand::uniform(rng, 0.0, 6.28));
      const complex<double> c2 = std::sqrt(1.0 - mix) *
                                 std::polar(1.0, testrand::uniform(rng, 0.0, 6.28));
      ScatteringGeometry g = forward_geometry(0.3);
      g.k_out_hat = khat;
      g.e_out = testrand::transverse_pol(rng, khat);
      g.e_in = c1 * ex + c2 * ey;  // unit by construction
      ScatteringGeometry gx = g;
      gx.e_in = ex;
      ScatteringGeometry gy = g;
      gy.e_in = ey;
      const complex<double> combined = elastic_amplitude(g, p);
      const complex<double> split =
          c1 * elastic_amplitude(gx, p) + c2 * elastic_amplitude(gy, p);
      CHECK(std::abs(combined - split) < 1e-13);
    }
  }

  SUBCASE("rotation invariance of the differential cross section") {
    const ModelParams p = dense_params();
    const double theta = 1.1;
    const double base = differential_cross_section(planar_geometry(theta, 0.2), p);
    // The same configuration built around the y axis instead of x.
    ScatteringGeometry rotated;
    rotated.k_in_hat = {0.0, 0.0, 1.0};
    rotated.k_out_hat = {0.0, std::sin(theta), std::cos(theta)};
    rotated.e_in = to_complex(Vec3{0.0, 1.0, 0.0});
    rotated.e_out = to_complex(Vec3{0.0, std::cos(theta), -std::sin(theta)});
    rotated.delta = 0.2;
    CHECK(rel_err(differential_cross_section(rotated, p), base) < 1e-12);
  }
}

TEST_CASE("amplitude with a cloud profile") {
  const ModelParams p = free_params();
  const double atoms = 1e4;
  const CondensateProfile cloud = CondensateProfile::thomas_fermi(atoms, 20.0);

  SUBCASE("forward scattering carries the whole atom number") {
    const complex<double> one = elastic_amplitude(forward_geometry(), p);
    const complex<double> all = elastic_amplitude(forward_geometry(), cloud, p);
    CHECK(rel_err(std::abs(all / one), atoms) < 1e-10);
  }

  SUBCASE("angular structure follows the momentum transfer") {
    // Compare against the closed-form shape at the geometry's own q.
    for (double theta : {0.3, 1.0, 2.2}) {
      const ScatteringGeometry g = planar_geometry(theta, 0.0);
      const double x = g.momentum_transfer(p) * cloud.tf_radius();
      const double expected = std::abs(oracle::tf_shape(x));
      const double got =
          std::abs(elastic_amplitude(g, cloud, p) / elastic_amplitude(g, p)) /
          atoms;
      CHECK(rel_err(got, expected) < 1e-6);
    }
  }

  SUBCASE("homogeneous profile is rejected") {
    const CondensateProfile uniform = CondensateProfile::homogeneous(0.05);
    CHECK_THROWS_AS(elastic_amplitude(forward_geometry(), uniform, p),
                    std::invalid_argument);
  }
}

TEST_CASE("polarization-summed cross section equals an explicit pair sum") {
  const ModelParams p = dense_params();
  auto rng = testrand::make_rng(8181);
  const Vec3 k_in{0.0, 0.0, 1.0};
  for (int trial = 0; trial < 30; ++trial) {
    const Vec3 k_out = testrand::unit_vec3(rng);
    const CVec3 e_in = testrand::transverse_pol(rng, k_in);
    const double delta = testrand::uniform(rng, -2.0, 2.0);

    const auto [pol_a, pol_b] = transverse_basis(k_out);
    ScatteringGeometry g;
    g.k_in_hat = k_in;
    g.k_out_hat = k_out;
    g.e_in = e_in;
    g.delta = delta;
    g.e_out = pol_a;
    const double da = differential_cross_section(g, p);
    g.e_out = pol_b;
    const double db = differential_cross_section(g, p);

    const double summed =
        polarization_summed_cross_section(k_in, e_in, k_out, delta, p);
    CHECK(rel_err(summed, da + db) < 1e-12);
  }
}

TEST_CASE("integrated elastic cross section") {
  SUBCASE("single scatterer: 6 pi on resonance, 3 pi at half width") {
    const ModelParams p = free_params();
    CHECK(rel_err(integrated_elastic(0.0, p), 6.0 * constants::pi) < 1e-9);
    CHECK(rel_err(integrated_elastic(0.5, p), 3.0 * constants::pi) < 1e-6);
    CHECK(rel_err(integrated_elastic(-0.5, p), 3.0 * constants::pi) < 1e-6);
  }

  SUBCASE("dilute gas: elastic accounts for the whole extinction") {
    ModelParams p = free_params();
    p.n_dimless = 1e-8;
    for (double delta : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      CHECK(rel_err(integrated_elastic(delta, p),
                    extinction_cross_section(delta, p)) < 1e-3);
    }
  }

  SUBCASE("dense gas on resonance") {
    const ModelParams p = dense_params();
    // The angular integral factorises: sigma = (3 pi / 2) |gamma G_exc|^2
    // for a unit structure amplitude at delta = 0.
    const GreenValue exc = g_exciton(0.0, p);
    REQUIRE(exc.ok());
    const double expected = 1.5 * constants::pi * std::norm(exc.value);
    CHECK(rel_err(integrated_elastic(0.0, p), expected) < 1e-10);
    // Collective damping opens extra attenuation beyond the elastic channel.
    CHECK(integrated_elastic(0.0, p) < extinction_cross_section(0.0, p));
  }

  SUBCASE("cloud profile against a plain reference quadrature") {
    const ModelParams p = free_params();
    const CondensateProfile cloud = CondensateProfile::thomas_fermi(1000.0, 5.0);
    const double got = integrated_elastic(0.0, cloud, p);

    // Simpson in u = cos(theta) with the phi integral done analytically:
    // for e_in = x, int dphi (1 - sin^2 theta cos^2 phi) = 2 pi - pi (1 - u^2).
    const int intervals = 4000;
    double sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double u = -1.0 + 2.0 * static_cast<double>(i) / intervals;
      const double q = std::sqrt(std::max(0.0, 2.0 - 2.0 * u));
      const double shape = oracle::tf_form_factor(1000.0, 5.0, q);
      const double phi_weight =
          2.0 * constants::pi - constants::pi * (1.0 - u * u);
      const double f = (9.0 / 16.0) * 4.0 * shape * shape * phi_weight;
      const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      sum += w * f;
    }
    const double reference = sum * (2.0 / intervals) / 3.0;
    CHECK(rel_err(got, reference) < 1e-7);
  }

  SUBCASE("grid misuse is rejected") {
    const ModelParams p = free_params();
    const CondensateProfile cloud = CondensateProfile::thomas_fermi(1e5, 40.0);
    AngularGrid grid;
    grid.theta_panels = 4;  // far below the 8 k R floor
    CHECK_THROWS_AS(integrated_elastic(0.0, cloud, p, grid),
                    std::invalid_argument);
    AngularGrid bad_tol;
    bad_tol.rel_tol = 0.0;
    CHECK_THROWS_AS(integrated_elastic(0.0, p, bad_tol), std::invalid_argument);
    const CondensateProfile uniform = CondensateProfile::homogeneous(0.05);
    CHECK_THROWS_AS(integrated_elastic(0.0, uniform, p), std::invalid_argument);
  }
}
