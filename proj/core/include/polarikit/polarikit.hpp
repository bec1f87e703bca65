#pragma once

#include "polarikit/condensate.hpp"
#include "polarikit/dielectric.hpp"
#include "polarikit/errors.hpp"
#include "polarikit/linalg.hpp"
#include "polarikit/params.hpp"
#include "polarikit/propagator.hpp"
#include "polarikit/scattering.hpp"
#include "polarikit/spectra.hpp"
#include "polarikit/version.hpp"
