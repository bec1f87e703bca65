#include "polarikit/condensate.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "polarikit/errors.hpp"
#include "polarikit/params.hpp"

namespace polarikit {

namespace {

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

}  // namespace

CondensateProfile CondensateProfile::homogeneous(double n_dimless) {
  require(std::isfinite(n_dimless) && n_dimless >= 0.0,
          "homogeneous profile: density must be finite and >= 0");
  CondensateProfile p;
  p.kind_ = ProfileKind::homogeneous;
  p.n_dimless_ = n_dimless;
  return p;
}

CondensateProfile CondensateProfile::thomas_fermi(double atom_count,
                                                  double tf_radius) {
  require(std::isfinite(atom_count) && atom_count > 0.0,
          "thomas_fermi profile: atom count must be finite and > 0");
  require(std::isfinite(tf_radius) && tf_radius > 0.0,
          "thomas_fermi profile: radius must be finite and > 0");
  CondensateProfile p;
  p.kind_ = ProfileKind::thomas_fermi;
  p.atom_count_ = atom_count;
  p.tf_radius_ = tf_radius;
  return p;
}

double CondensateProfile::n_dimless() const {
  require(kind_ == ProfileKind::homogeneous,
          "n_dimless is defined for homogeneous profiles only");
  return n_dimless_;
}

double CondensateProfile::atom_count() const {
  require(kind_ == ProfileKind::thomas_fermi,
          "atom_count is defined for Thomas-Fermi profiles only");
  return atom_count_;
}

double CondensateProfile::tf_radius() const {
  require(kind_ == ProfileKind::thomas_fermi,
          "tf_radius is defined for Thomas-Fermi profiles only");
  return tf_radius_;
}

double CondensateProfile::peak_density() const {
  require(kind_ == ProfileKind::thomas_fermi,
          "peak_density is defined for Thomas-Fermi profiles only");
  return 15.0 * atom_count_ / (8.0 * constants::pi * tf_radius_ * tf_radius_ *
                               tf_radius_);
}

double density_at(const CondensateProfile& profile, double r) {
  require(std::isfinite(r) && r >= 0.0, "density_at: radius must be >= 0");
  if (profile.kind() == ProfileKind::homogeneous) return profile.n_dimless();
  const double radius = profile.tf_radius();
  if (r >= radius) return 0.0;
  const double x = r / radius;
  return profile.peak_density() * (1.0 - x * x);
}

double form_factor(const CondensateProfile& profile, double q, double rel_tol) {
  require(profile.kind() == ProfileKind::thomas_fermi,
          "form_factor: defined for Thomas-Fermi profiles only");
  require(std::isfinite(q), "form_factor: q must be finite");
  require(std::isfinite(rel_tol) && rel_tol > 0.0,
          "form_factor: rel_tol must be finite and > 0");

  const double radius = profile.tf_radius();
  const double qa = std::abs(q);  // spherical symmetry: F depends on |q|

  // F(q) = 4 pi / q * integral_0^R n(r) r sin(q r) dr; the q -> 0 limit of
  // the kernel is r^2, giving the normalisation integral F(0) = N.
  const auto integrand = [&](double r) {
    const double n = density_at(profile, r);
    return qa > 0.0 ? n * r * std::sin(qa * r) / qa : n * r * r;
  };

  // Split at the half-periods of sin(q r) so each adaptive pass sees a
  // single-signed, smooth piece.
  const std::size_t oscillations =
      static_cast<std::size_t>(std::ceil(qa * radius / constants::pi));
  const std::size_t panels = std::clamp<std::size_t>(oscillations, 1, 1 << 16);

  using quad = boost::math::quadrature::gauss_kronrod<double, 31>;
  double total = 0.0;
  double abs_total = 0.0;
  double err_total = 0.0;
  for (std::size_t i = 0; i < panels; ++i) {
    const double a = radius * static_cast<double>(i) / static_cast<double>(panels);
    const double b =
        radius * static_cast<double>(i + 1) / static_cast<double>(panels);
    double err = 0.0;
    const double part = quad::integrate(integrand, a, b, 10, rel_tol / 8.0, &err);
    total += part;
    abs_total += std::abs(part);
    err_total += err;
  }

  // The oscillating panels cancel; measure the error against the
  // non-cancelling mass so a near-zero of F(q) is not misreported.
  const double scale = std::max(abs_total, 1e-300);
  if (!(err_total <= rel_tol * scale)) {
    throw QuadratureError("form_factor: quadrature error " +
                          std::to_string(err_total) + " exceeds tolerance at q = " +
                          std::to_string(q));
  }
  return 4.0 * constants::pi * total;
}

}  // namespace polarikit
