#pragma once

namespace polarikit {

enum class ProfileKind { homogeneous, thomas_fermi };

// Ground-state density profile |Xi(r)|^2 of the condensate. Lengths are in
// units of 1/k0 and densities in atoms per (1/k0)^3 throughout.
class CondensateProfile {
 public:
  // Uniform gas of reduced density n0/k0^3 (no boundary, no form factor).
  static CondensateProfile homogeneous(double n_dimless);

  // Parabolic Thomas-Fermi profile n(r) = n_peak (1 - r^2/R^2) inside radius
  // R (in 1/k0), normalised to the given atom count.
  static CondensateProfile thomas_fermi(double atom_count, double tf_radius);

  ProfileKind kind() const noexcept { return kind_; }

  double n_dimless() const;    // homogeneous only
  double atom_count() const;   // thomas_fermi only
  double tf_radius() const;    // thomas_fermi only
  double peak_density() const; // thomas_fermi only: 15 N / (8 pi R^3)

 private:
  CondensateProfile() = default;
  ProfileKind kind_ = ProfileKind::homogeneous;
  double n_dimless_ = 0.0;
  double atom_count_ = 0.0;
  double tf_radius_ = 0.0;
};

// Density at radius r (in 1/k0); zero outside a Thomas-Fermi cloud,
// constant for the homogeneous gas.
double density_at(const CondensateProfile& profile, double r);

// Static structure amplitude F(q) = integral d^3r e^{i q.r} n(r) for a
// Thomas-Fermi cloud, real by spherical symmetry, with F(0) = N. q is in
// units of k0. Evaluated by adaptive Gauss-Kronrod quadrature after
// splitting [0, R] into half-period panels of sin(qr); throws
// QuadratureError if the estimated error exceeds rel_tol, and
// std::invalid_argument for a homogeneous profile (no normalisable F).
double form_factor(const CondensateProfile& profile, double q,
                   double rel_tol = 1e-8);

}  // namespace polarikit
