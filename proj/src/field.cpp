#include "apwt/field.hpp"

#include <cmath>
#include <stdexcept>

namespace apwt {

Spectrum propagate(const Spectrum& fhat, Sector sector, double y) {
    if (!(y >= 0.0) || !std::isfinite(y))
        throw std::domain_error("propagate: depth y must be finite and non-negative");
    const Grid2D& g = fhat.signal_grid;
    ComplexMatrix out(g.n_t, g.n_x);
    const bool oscillatory = (sector == Sector::d1 || sector == Sector::d2);
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const double kx = g.k_x(c);
            if (!in_sector(st, kx, sector)) continue;
            Complex kernel;
            if (oscillatory) {
                const double k_y = std::sqrt((st - kx) * (st + kx));
                kernel = std::polar(1.0, k_y * y);
            } else {
                const double s = std::sqrt((kx - st) * (kx + st));
                kernel = std::exp(-s * y);
            }
            out(r, c) = fhat.values(r, c) * kernel;
        }
    }
    return Spectrum(g, std::move(out));
}

HalfPlaneField solve_halfplane(const BoundarySignal& boundary,
                               const std::vector<double>& heights) {
    const Spectrum fhat = forward_fourier(boundary);
    HalfPlaneField field;
    field.heights = heights;
    field.slices.reserve(heights.size() * 4);
    field.totals.reserve(heights.size());
    for (double y : heights) {
        ComplexMatrix total(boundary.grid.n_t, boundary.grid.n_x);
        for (int s = 1; s <= 4; ++s) {
            const Sector sector = sector_from_int(s);
            const Spectrum propagated = propagate(fhat, sector, y);
            FieldSlice slice;
            slice.grid = boundary.grid;
            slice.sector = sector;
            slice.y = y;
            slice.values = inverse_fourier(propagated).values;
            for (std::size_t i = 0; i < total.size(); ++i)
                total.values()[i] += slice.values.values()[i];
            field.slices.push_back(std::move(slice));
        }
        field.totals.push_back(std::move(total));
    }
    return field;
}

double wave_residual(const BoundarySignal& below, const BoundarySignal& middle,
                     const BoundarySignal& above, double dy, double c) {
    if (!(dy > 0.0) || !std::isfinite(dy))
        throw std::invalid_argument("wave_residual: slice spacing dy must be positive");
    if (!(c > 0.0)) throw std::invalid_argument("wave_residual: wave speed must be positive");
    if (!(below.grid == middle.grid) || !(above.grid == middle.grid))
        throw std::invalid_argument("wave_residual: the three slices must share one lattice");

    const Grid2D& g = middle.grid;
    const Spectrum mid_hat = forward_fourier(middle);

    // u_tt = -sigma_t^2 c^2 u and u_xx = -k_x^2 u, bin by bin.  sigma_t is
    // omega/c, so the time axis carries the extra c^2.
    ComplexMatrix utt_hat(g.n_t, g.n_x);
    ComplexMatrix uxx_hat(g.n_t, g.n_x);
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t col = 0; col < g.n_x; ++col) {
            const double kx = g.k_x(col);
            utt_hat(r, col) = mid_hat.values(r, col) * (-st * st * c * c);
            uxx_hat(r, col) = mid_hat.values(r, col) * (-kx * kx);
        }
    }
    const ComplexMatrix u_tt = inverse_fourier(Spectrum(g, std::move(utt_hat))).values;
    const ComplexMatrix u_xx = inverse_fourier(Spectrum(g, std::move(uxx_hat))).values;

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < u_tt.size(); ++i) {
        const Complex u_yy = (below.values.values()[i] - 2.0 * middle.values.values()[i] +
                              above.values.values()[i]) /
                             (dy * dy);
        const Complex resid = u_tt.values()[i] - c * c * (u_xx.values()[i] + u_yy);
        num += std::norm(resid);
        den += std::norm(u_tt.values()[i]);
    }
    if (den == 0.0) return 0.0;
    return std::sqrt(num / den);
}

}  // namespace apwt
