#include "polarikit/dielectric.hpp"

#include <cmath>

namespace polarikit {

std::complex<double> reduced_polarizability(std::complex<double> delta) {
  return 1.0 / std::complex<double>(-delta.real(), -delta.imag() - 0.5);
}

std::complex<double> refractive_root(std::complex<double> eps) {
  // std::sqrt follows the sign bit of a zero imaginary part; a real negative
  // eps with imag = -0.0 would land on the lower branch (-i sqrt|eps|).
  // Normalise to +0.0 so the cut is approached from above.
  if (eps.imag() == 0.0) eps = {eps.real(), +0.0};
  return std::sqrt(eps);
}

Permittivity permittivity(std::complex<double> delta, const ModelParams& params) {
  params.validate();
  if (params.epsilon_mode == EpsilonMode::unity || params.n_dimless == 0.0) {
    return {};
  }

  const double shift = constants::pi * params.n_dimless;
  const std::complex<double> base = delta + std::complex<double>(0.0, 0.5);
  const std::complex<double> denom = base + shift;

  Permittivity out;
  if (denom == 0.0) {  // reachable only for complex delta = -pi*n - i/2
    out.singular = true;
    out.value = {0.0, 0.0};
    out.root = {0.0, 0.0};
    return out;
  }
  out.value = (base - 2.0 * shift) / denom;
  out.root = refractive_root(out.value);
  return out;
}

}  // namespace polarikit
