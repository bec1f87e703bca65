#pragma once

#include <complex>

#include "polarikit/params.hpp"

namespace polarikit {

// Single-atom reduced polarizability f(delta) = 1 / (-delta - i/2), the
// two-level response in units of d0^2/(hbar gamma). The same expression is the
// analytic continuation for complex detunings.
std::complex<double> reduced_polarizability(std::complex<double> delta);

struct Permittivity {
  std::complex<double> value{1.0, 0.0};  // eps(delta)
  std::complex<double> root{1.0, 0.0};   // principal sqrt(eps), Re >= 0
  bool singular = false;  // local-field denominator vanished (complex delta only)
};

// Dielectric function of the uniform condensate with the local-field
// (Lorentz-Lorenz) correction resummed:
//
//   eps = 1 + 3*pi*n f / (1 - pi*n f) = (delta + i/2 - 2*pi*n) / (delta + i/2 + pi*n)
//
// evaluated in the cancellation-free ratio form, whose only finite pole is the
// shifted resonance delta = -pi*n - i/2. In unity mode eps is identically 1.
// For real detunings the result is never singular; the flag can only be set by
// complex-delta continuations that land on the pole.
Permittivity permittivity(std::complex<double> delta, const ModelParams& params);

// Principal square root with the branch cut on the negative real axis and
// Re >= 0; a negative real input maps to +i*sqrt(|eps|), so an absorbing
// medium always damps (never amplifies) the propagating mode.
std::complex<double> refractive_root(std::complex<double> eps);

}  // namespace polarikit
