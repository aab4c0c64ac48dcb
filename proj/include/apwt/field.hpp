#pragma once

/// Propagation of boundary data into the half-plane y > 0.
///
/// Each spectral sector extends into the interior with its own kernel: the
/// propagating sectors (D1, D2) pick up a phase exp(i k_y y) with
/// k_y = sqrt(sigma_t^2 - k_x^2), the evanescent sectors (D3, D4) decay as
/// exp(-s y) with s = sqrt(k_x^2 - sigma_t^2).  Light-cone bins
/// (|sigma_t| == |k_x|) belong to no sector and are dropped.

#include <vector>

#include "apwt/fourier.hpp"
#include "apwt/grid.hpp"
#include "apwt/sectors.hpp"
#include "apwt/types.hpp"

namespace apwt {

/// One sector's contribution to the field on the line y = const.
struct FieldSlice {
    Grid2D grid;           ///< boundary (ct, x) lattice the slice lives on
    Sector sector = Sector::d1;
    double y = 0.0;
    ComplexMatrix values;  ///< u_j(ct, x; y), same shape as `grid`
};

/// Extends one sector of a boundary spectrum to depth y >= 0 and returns the
/// propagated spectrum (same lattice).  Bins outside `sector` are zeroed.
/// Throws std::domain_error for y < 0: the evanescent kernels blow up there
/// and the propagating ones would run the problem backwards.
Spectrum propagate(const Spectrum& fhat, Sector sector, double y);

/// Field of all four sectors on a stack of horizontal lines.
struct HalfPlaneField {
    std::vector<double> heights;            ///< the y values, as given
    std::vector<FieldSlice> slices;         ///< size heights.size() * 4, sector-major per height
    std::vector<ComplexMatrix> totals;      ///< per height: sum of the four sector slices
};

/// Solves the Dirichlet problem for the wave equation on y > 0 from boundary
/// data at y = 0: masks the spectrum into sectors, propagates each to every
/// requested height, and synthesizes coordinate-space slices.  At y = 0 the
/// total equals the boundary signal minus its light-cone bins.
HalfPlaneField solve_halfplane(const BoundarySignal& boundary, const std::vector<double>& heights);

/// Relative residual of the wave equation at the middle height of three
/// equally spaced slices (y - dy, y, y + dy) of the same total field:
///
///     || u_tt - c^2 (u_xx + u_yy) || / || u_tt ||
///
/// u_tt and u_xx are evaluated spectrally on the middle slice; u_yy uses the
/// central second difference across the stack.  Returns 0 for a zero field.
double wave_residual(const BoundarySignal& below, const BoundarySignal& middle,
                     const BoundarySignal& above, double dy, double c = 1.0);

}  // namespace apwt
