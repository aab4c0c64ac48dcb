#pragma once

#include <cstddef>

#include "apwt/types.hpp"

namespace apwt {

/// Uniform rectangular lattice on the boundary plane.  The first axis is the
/// time-like coordinate ct, the second the transverse coordinate x.  The same
/// type doubles as a generic uniform 2D grid (e.g. an (x, y) window for packet
/// slices); member names follow the primary boundary-plane use.
struct Grid2D {
    std::size_t n_t = 0;   ///< samples along ct
    std::size_t n_x = 0;   ///< samples along x
    double dt = 0.0;       ///< ct step
    double dx = 0.0;       ///< x step
    double origin_t = 0.0; ///< ct of row 0
    double origin_x = 0.0; ///< x of column 0

    Grid2D() = default;
    Grid2D(std::size_t n_t_, std::size_t n_x_, double dt_, double dx_,
           double origin_t_ = 0.0, double origin_x_ = 0.0);

    std::size_t count() const { return n_t * n_x; }

    double ct(std::size_t row) const { return origin_t + static_cast<double>(row) * dt; }
    double x(std::size_t col) const { return origin_x + static_cast<double>(col) * dx; }

    /// Frequency steps of the dual lattice.
    double dsigma_t() const;
    double dk_x() const;

    /// Centered dual-axis values: sigma_t(row) for row in [0, n_t), ascending,
    /// covering integer multiples m*dsigma_t with m in [-(n_t/2), ...).
    double sigma_t(std::size_t row) const;
    double k_x(std::size_t col) const;

    /// Integer frequency index for a centered row/column (m such that
    /// sigma_t(row) == m * dsigma_t()).
    long freq_index_t(std::size_t row) const;
    long freq_index_x(std::size_t col) const;

    /// The dual grid itself: same sample counts, axes are (omega/c, k_x) in
    /// centered order.
    Grid2D dual() const;

    bool operator==(const Grid2D&) const = default;
};

/// Complex samples f(ct, x) on a boundary-plane grid.
struct BoundarySignal {
    Grid2D grid;
    ComplexMatrix values;

    BoundarySignal() = default;
    BoundarySignal(Grid2D g, ComplexMatrix v);

    /// Discrete L2 norm squared: sum |f|^2 * dt * dx.
    double norm_squared() const;
};

/// Centered-order samples fhat(sigma_t, k_x) produced by forward_fourier.
/// Keeps the originating boundary grid so the transform can be inverted and
/// the dual axes recovered.  The pairing convention is fixed:
/// (sigma, chi) = -omega*t + k_x*x, fhat(sigma) = integral f(chi) e^{-i(sigma,chi)}.
struct Spectrum {
    Grid2D signal_grid;
    ComplexMatrix values;

    /// Records the Minkowski pairing the transform uses; purely informative.
    static constexpr const char* convention = "(sigma,chi) = -omega t + k_x x";

    Spectrum() = default;
    Spectrum(Grid2D g, ComplexMatrix v);

    Grid2D dual_grid() const { return signal_grid.dual(); }
    double sigma_t(std::size_t row) const { return signal_grid.sigma_t(row); }
    double k_x(std::size_t col) const { return signal_grid.k_x(col); }

    /// Spectral-domain L2 norm squared with the 1/(2pi)^2 measure:
    /// (1/(2pi)^2) sum |fhat|^2 dsigma_t dk_x.  Equals the signal norm_squared
    /// by the discrete Parseval identity.
    double norm_squared() const;
};

}  // namespace apwt
