#include "apwt/calibration.hpp"

#include <stdexcept>

#include "apwt/sources.hpp"
#include "apwt/transform.hpp"

namespace apwt {

FrequencyCalibration measure_frequency_calibration(const MotherSpec& spec, const Grid2D& grid,
                                                   double c) {
    FrequencyCalibration cal;
    const BoundarySignal reference(
        grid, single_source_trace(grid, cal.omega_ref, cal.rapidity_ref, 0.0, -5000.0, c));

    // Expected peak: a = kappa*c/omega.  Scan a narrow window around it with a
    // step far below the mother's own peak width 1/(kappa*sigma_par).
    const double a_center = spec.kappa * c / cal.omega_ref;
    MuSampling sampling;
    sampling.scale = ScaleAxis(0.8 * a_center, 1.25 * a_center, 201);
    sampling.phi = RapidityAxis(cal.rapidity_ref - 0.15, cal.rapidity_ref + 0.15, 31);

    const Diagram diagram = scale_rapidity_diagram(reference, spec, sampling);
    const std::vector<Peak> peaks = detect_peaks(diagram, 1, spec.kappa);
    if (peaks.empty())
        throw std::runtime_error(
            "frequency calibration: the reference source produced no interior diagram "
            "maximum; the lattice cannot resolve frequencies near the reference");
    cal.a_peak = peaks.front().scale;
    cal.kappa_eff = cal.a_peak * cal.omega_ref / c;
    return cal;
}

}  // namespace apwt
