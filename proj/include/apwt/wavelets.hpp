#pragma once

#include <cmath>
#include <optional>

#include "apwt/geometry.hpp"
#include "apwt/grid.hpp"
#include "apwt/sectors.hpp"
#include "apwt/types.hpp"

namespace apwt {

/// Parameters of a Gaussian-packet mother solution attached to one sector.
/// kappa is the center of the radial Gaussian, sigma_par / sigma_perp its
/// inverse widths along and across the sector's hyperbola axis.
struct MotherSpec {
    Sector sector = Sector::d1;
    double kappa = 0.0;
    double sigma_par = 0.0;
    double sigma_perp = 0.0;

    MotherSpec() = default;
    MotherSpec(Sector sector_, double kappa_, double sigma_par_, double sigma_perp_);

    /// Localisation quality p = (kappa * sigma_par)^2.  Packets with
    /// kappa*sigma_par <= 2 are poorly localised; callers may warn.
    double localization_p() const { return (kappa * sigma_par) * (kappa * sigma_par); }
    bool well_localized() const { return kappa * sigma_par > 2.0; }
};

/// Transform-domain point mu = {b, a, phi}: boundary-plane shift, scale and
/// rapidity of a family member.
struct WaveletPoint {
    double shift_ct = 0.0;  ///< c*tau component of b
    double shift_x = 0.0;   ///< b_x component of b
    double scale = 1.0;     ///< a > 0
    double rapidity = 0.0;  ///< phi
};

/// Mother solution spectrum at height y >= 0 evaluated at sigma = (omega/c, k_x).
///
/// Sector 1 (omega > 0, |k_x| < omega/c), with k = omega/c, k_y = sqrt(k^2 - k_x^2):
///   (k / k_y) exp(-sigma_par^2 (k_y - kappa)^2 / 2 - sigma_perp^2 k_x^2 / 2 - 1/k_y)
///   * exp(+i k_y y)
/// Sector 2 mirrors sector 1 under omega -> -omega (time reversal of the packet).
/// Sector 3 (k_x > |omega|/c), with s = sqrt(k_x^2 - k^2):
///   (k_x / s) exp(-sigma_par^2 (s - kappa)^2 / 2 - sigma_perp^2 k^2 / 2 - 1/s)
///   * exp(-s y)
/// Sector 4 mirrors sector 3 under k_x -> -k_x.
///
/// Exactly zero outside the open sector, including on the light cone.  The
/// exp(-1/k_y) (resp. exp(-1/s)) factor suppresses the cone edge and is what
/// makes the admissibility integral finite.  y < 0 is rejected for the
/// evanescent sectors 3 and 4 (the e^{-s y} factor would grow unboundedly).
Complex mother_hat(const MotherSpec& spec, const Vec2& sigma, double y);

/// Family member spectrum at height y:
///   a * mother_hat(spec, a * Lambda_phi * sigma, y / a) * e^{-i (sigma, b)}
/// with the Minkowski pairing (sigma, b) = -sigma_t * b_ct + k_x * b_x.
/// Supported in the same sector as the mother for every mu.
Complex family_hat(const MotherSpec& spec, const WaveletPoint& mu, const Vec2& sigma,
                   double y);

/// Quadrature controls for admissibility_constant.
struct AdmissibilityOptions {
    double rel_tol = 1e-8;       ///< stop refining when the estimate moves less than this
    std::size_t max_doublings = 12;
    std::size_t initial_rho = 129;   ///< starting sample counts (trapezoid, inclusive ends)
    std::size_t initial_phi = 129;
    /// Verification hook: drop the exp(-1/k_y) regulariser.  The integral then
    /// diverges near the cone; combined with rho_min it exposes the divergence
    /// rate.  Never used by production paths.
    bool drop_cone_regularizer = false;
    double rho_min = 0.0;        ///< override lower rho cut (0 = automatic)
};

struct AdmissibilityResult {
    double value = 0.0;
    double error_estimate = 0.0;  ///< |last refinement delta|
    std::size_t evaluations = 0;
};

/// Admissibility constant C_j = integral over D_j of |mother_hat|^2 / |(omega/c)^2 - k_x^2|.
/// Evaluated in hyperbolic coordinates where the cone factor cancels:
/// C_j = int_0^inf drho int dphi0 |psi_hat(rho, phi0)|^2 / rho, a smooth
/// integrand that vanishes at both ends of the truncated domain.  All four
/// sectors share the same value for the same (kappa, sigma_par, sigma_perp)
/// because the mirrored integrands coincide in these coordinates.
AdmissibilityResult admissibility_constant(const MotherSpec& spec,
                                           const AdmissibilityOptions& options = {});

/// Coordinate-domain slice of the sector-1 mother at fixed ct on an (x, y)
/// window (rows sample y, columns x):
///   Psi_1(ct, x, y) = (1/(2pi)^2) int dk_x int_{k_y>0} dk_y
///       exp(-sigma_par^2 (k_y-kappa)^2/2 - sigma_perp^2 k_x^2/2 - 1/k_y)
///       e^{i(k_x x + k_y y - k c t)},   k = sqrt(k_x^2 + k_y^2).
/// Sampled on the window's dual lattice and synthesised by FFT.
struct TimeSlice {
    Grid2D window;          ///< rows = y, cols = x
    ComplexMatrix values;
    double edge_energy_fraction = 0.0;  ///< |u|^2 share in the outer 2-cell frame
    bool window_warning = false;        ///< true when that share exceeds 1%
};

TimeSlice mother_time_slice(const MotherSpec& spec, double ct, const Grid2D& window);

namespace detail {

/// Scalar spectral profile |mother_hat| at y = 0, written in the sector's
/// hyperbolic coordinates (all four sectors coincide in this chart).  Used by
/// the admissibility quadrature; unit tests pin it against mother_hat.
inline double mother_profile_hyperbolic(const MotherSpec& spec, double rho, double phi0,
                                        bool drop_regularizer) {
    const double cosh_phi0 = std::cosh(phi0);
    const double sinh_phi0 = std::sinh(phi0);
    const double d_par = spec.sigma_par * (rho - spec.kappa);
    const double d_perp = spec.sigma_perp * rho * sinh_phi0;
    double exponent = -0.5 * d_par * d_par - 0.5 * d_perp * d_perp;
    if (!drop_regularizer) exponent -= 1.0 / rho;
    if (exponent < -745.0) return 0.0;  // underflows to 0 anyway; skip exp()
    return cosh_phi0 * std::exp(exponent);
}

}  // namespace detail

}  // namespace apwt
