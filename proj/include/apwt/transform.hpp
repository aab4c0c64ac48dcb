#pragma once

#include <cstddef>
#include <vector>

#include "apwt/fourier.hpp"
#include "apwt/grid.hpp"
#include "apwt/wavelets.hpp"

namespace apwt {

/// Log-uniform scale axis a_i = a_min * (a_max/a_min)^{i/(count-1)}.
struct ScaleAxis {
    double a_min = 0.0;
    double a_max = 0.0;
    std::size_t count = 0;

    ScaleAxis() = default;
    ScaleAxis(double a_min_, double a_max_, std::size_t count_);

    double log_step() const;
    double value(std::size_t i) const;
    /// Exact integral of da/a^3 over the centered log-cell of sample i:
    /// sinh(log_step) / a_i^2.
    double cell_weight(std::size_t i) const;
};

/// Uniform rapidity axis phi_i = phi_min + i * step.
struct RapidityAxis {
    double phi_min = 0.0;
    double phi_max = 0.0;
    std::size_t count = 0;

    RapidityAxis() = default;
    RapidityAxis(double phi_min_, double phi_max_, std::size_t count_);

    double step() const;
    double value(std::size_t i) const;
    /// Trapezoid weight: step, halved at the axis ends.
    double cell_weight(std::size_t i) const;
};

/// Sampling of the transform parameters (b runs over the signal grid).
struct MuSampling {
    RapidityAxis phi;
    ScaleAxis scale;

    /// Production defaults: phi in [-1.5, 1.5] with 61 samples; scale spanning
    /// 4 octaves centered on `a_center` with 65 samples.
    static MuSampling production(double a_center);
    /// Same ranges with the sample counts scaled by `factor` (>= 1).
    MuSampling refined(double factor) const;
};

/// Energy-weighted dominant scale of a sector's content: exp of the mean of
/// ln(kappa / rho) over the sector bins, weighted by |fhat|^2.  This is where
/// the family's radial Gaussian aligns with the signal.  Throws when the
/// sector carries no energy.
double dominant_scale(const Spectrum& fhat, const MotherSpec& spec);

/// Transform coefficients F(b, a, phi) for all b on the signal grid and all
/// (a, phi) samples.  Storage is row-major over (phi, a, b_ct, b_x).
struct CoefficientGrid {
    MotherSpec mother;
    Grid2D b_grid;
    RapidityAxis phi_axis;
    ScaleAxis scale_axis;
    std::vector<Complex> values;

    std::size_t index(std::size_t ip, std::size_t ia, std::size_t it, std::size_t ix) const {
        return ((ip * scale_axis.count + ia) * b_grid.n_t + it) * b_grid.n_x + ix;
    }
    Complex& at(std::size_t ip, std::size_t ia, std::size_t it, std::size_t ix) {
        return values[index(ip, ia, it, ix)];
    }
    const Complex& at(std::size_t ip, std::size_t ia, std::size_t it, std::size_t ix) const {
        return values[index(ip, ia, it, ix)];
    }
};

/// Scale-rapidity energy density S(a, phi) = (1/a^3) int d^2b |F(b, a, phi)|^2.
/// Storage is row-major over (a, phi).
struct Diagram {
    ScaleAxis scale_axis;
    RapidityAxis phi_axis;
    std::vector<double> values;

    double& at(std::size_t ia, std::size_t ip) { return values[ia * phi_axis.count + ip]; }
    const double& at(std::size_t ia, std::size_t ip) const {
        return values[ia * phi_axis.count + ip];
    }
};

/// Single transform coefficient F_j(mu) = (1/(2pi)^2) (fhat, psi_hat_mu) via
/// the spectral inner product.
Complex apwt_point(const Spectrum& fhat, const MotherSpec& spec, const WaveletPoint& mu);

/// The same coefficient via the coordinate-domain pairing
/// F_j(mu) = int d^2chi f(chi) conj(psi_mu(chi)) dt dx, with psi_mu obtained
/// by inverse Fourier synthesis on the signal grid.  Slow cross-check path.
Complex apwt_point_direct(const BoundarySignal& f, const MotherSpec& spec,
                          const WaveletPoint& mu);

/// All shifts at once for one (a, phi): F(b) equals the inverse Fourier
/// transform of fhat(sigma) * a * conj(mother_hat(a Lambda_phi sigma)), so one
/// FFT yields the whole slab on the signal grid.
ComplexMatrix apwt_slab(const Spectrum& fhat, const MotherSpec& spec, double a, double phi);

/// Full coefficient grid (one slab per (a, phi) sample).  Refuses to allocate
/// more than ~2 GiB; thin wrappers should stream slabs instead at that size.
CoefficientGrid apwt_grid(const Spectrum& fhat, const MotherSpec& spec,
                          const MuSampling& sampling);

struct PlancherelReport {
    double ratio = 0.0;            ///< discrete LHS / (C_j * ||f_j||^2) at the given sampling
    double admissibility = 0.0;    ///< C_j used
    double sector_norm_squared = 0.0;
    bool sector_empty = false;     ///< ||f_j|| == 0: ratio is meaningless
    std::vector<double> ladder_ratios;  ///< ratios at successive refinements (incl. the main one)
    bool stabilizing = false;      ///< |ratio-1| non-increasing along the ladder
};

struct PlancherelOptions {
    std::size_t ladder_levels = 3;   ///< coarse, given, refined, ...
    double tamper_family_norm = 1.0; ///< verification hook: scales |psi_hat|^2 sums
};

/// Discrete check of the isometry
///   int dphi int da/a^3 int d^2b |F|^2 = C_j ||f_j||^2.
/// The b-integral collapses by Parseval to (a^2/(2pi)^2) sum |fhat|^2
/// |mother_hat(a Lambda_phi sigma)|^2, so no per-slab FFTs are needed.
PlancherelReport plancherel_check(const BoundarySignal& f, const MotherSpec& spec,
                                  const MuSampling& sampling,
                                  const PlancherelOptions& options = {});

/// Resolution of identity: f_rec = (1/C_j) sum_mu w_mu F(mu) psi_mu(.; y),
/// assembled in the spectral domain with one forward FFT per (a, phi) slab and
/// a single final synthesis.  `out_grid` must equal the coefficient b-grid.
BoundarySignal reconstruct(const CoefficientGrid& coeffs, double admissibility, double y,
                           const Grid2D& out_grid);

/// Transform + reconstruct fused per slab without materialising the 4D grid.
BoundarySignal reconstruct_streamed(const BoundarySignal& f, const MotherSpec& spec,
                                    const MuSampling& sampling, double admissibility,
                                    double y);

enum class DiagramPath { fast, direct };

struct DiagramOptions {
    DiagramPath path = DiagramPath::fast;
    /// Bins with |fhat|^2 below this fraction of the peak bin are skipped by
    /// the fast path.
    double prune_rel_threshold = 1e-14;
};

/// S(a, phi) over the sampling grid.  The fast path evaluates the Parseval
/// form (1/a)(1/(2pi)^2) sum |fhat|^2 |mother_hat(a Lambda_phi sigma)|^2; the
/// direct path sums |apwt_slab|^2 d^2b / a^3 as a cross-check.
Diagram scale_rapidity_diagram(const BoundarySignal& f, const MotherSpec& spec,
                               const MuSampling& sampling, const DiagramOptions& options = {});

struct Peak {
    double scale = 0.0;     ///< sub-cell refined a
    double rapidity = 0.0;  ///< sub-cell refined phi
    double height = 0.0;    ///< interpolated S value
    double omega = 0.0;     ///< freq_calibration / scale
    double v_over_c = 0.0;  ///< tanh(rapidity)
    std::size_t cell_a = 0;
    std::size_t cell_phi = 0;
};

/// Strict 8-neighbourhood local maxima of the diagram interior, refined by a
/// per-axis quadratic fit in (ln a, phi), sorted by interpolated height
/// (ties: smaller a then smaller phi first).  At most `count` peaks are
/// returned.  `freq_calibration` maps scale to frequency via
/// omega = freq_calibration / a; measure it once per source class with
/// measure_frequency_calibration().
std::vector<Peak> detect_peaks(const Diagram& diagram, std::size_t count,
                               double freq_calibration);

}  // namespace apwt
