#pragma once

/// Empirical frequency calibration for diagram peaks.
///
/// A monochromatic source of rest-frame frequency omega sits on the spectral
/// hyperbola rho = omega/c, so its diagram peak appears near a = kappa*c/omega.
/// Reading a frequency off a peak therefore needs the effective constant
/// kappa_eff with omega = kappa_eff*c/a.  kappa_eff is close to the mother's
/// kappa but not identical (the regularizer and the 1/a prefactors shift the
/// maximum slightly), so it is measured once from a synthetic reference run on
/// the same lattice the diagram uses.

#include "apwt/grid.hpp"
#include "apwt/wavelets.hpp"

namespace apwt {

struct FrequencyCalibration {
    double kappa_eff = 0.0;      ///< omega(a) = kappa_eff * c / a
    double a_peak = 0.0;         ///< interpolated peak scale of the reference run
    double omega_ref = 1.0;      ///< reference source frequency
    double rapidity_ref = 0.5;   ///< reference source rapidity
};

/// Runs one far-field source (omega = 1, rapidity 0.5, depth -5000) on `grid`,
/// scans a fine (a, phi) neighbourhood of the expected maximum, and returns
/// the measured kappa_eff.  The grid must resolve frequencies around 1/c.
FrequencyCalibration measure_frequency_calibration(const MotherSpec& spec, const Grid2D& grid,
                                                   double c = 1.0);

}  // namespace apwt
