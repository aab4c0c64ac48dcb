#include "apwt/wavelets.hpp"

#include <cmath>
#include <stdexcept>

#include "apwt/fourier.hpp"

namespace apwt {

namespace {

constexpr double kMinExponent = -745.0;  // exp() underflows to 0 below this

/// Sector-1 spectrum at (k = omega/c, k_x) strictly inside D1, height y.
Complex forward_mother(const MotherSpec& spec, double k, double k_x, double y) {
    const double k_y = std::sqrt((k - k_x) * (k + k_x));
    const double d_par = spec.sigma_par * (k_y - spec.kappa);
    const double d_perp = spec.sigma_perp * k_x;
    const double exponent = -0.5 * d_par * d_par - 0.5 * d_perp * d_perp - 1.0 / k_y;
    if (exponent < kMinExponent) return Complex(0.0, 0.0);
    const double magnitude = (k / k_y) * std::exp(exponent);
    return std::polar(magnitude, k_y * y);
}

/// Sector-3 spectrum at (k, k_x) strictly inside D3, height y >= 0.
Complex evanescent_mother(const MotherSpec& spec, double k, double k_x, double y) {
    const double s = std::sqrt((k_x - k) * (k_x + k));
    const double d_par = spec.sigma_par * (s - spec.kappa);
    const double d_perp = spec.sigma_perp * k;
    const double exponent = -0.5 * d_par * d_par - 0.5 * d_perp * d_perp - 1.0 / s - s * y;
    if (exponent < kMinExponent) return Complex(0.0, 0.0);
    return Complex((k_x / s) * std::exp(exponent), 0.0);
}

}  // namespace

MotherSpec::MotherSpec(Sector sector_, double kappa_, double sigma_par_, double sigma_perp_)
    : sector(sector_), kappa(kappa_), sigma_par(sigma_par_), sigma_perp(sigma_perp_) {
    if (!(kappa > 0.0) || !std::isfinite(kappa))
        throw std::invalid_argument("MotherSpec: kappa must be positive and finite");
    if (!(sigma_par > 0.0) || !std::isfinite(sigma_par))
        throw std::invalid_argument("MotherSpec: sigma_par must be positive and finite");
    if (!(sigma_perp > 0.0) || !std::isfinite(sigma_perp))
        throw std::invalid_argument("MotherSpec: sigma_perp must be positive and finite");
}

Complex mother_hat(const MotherSpec& spec, const Vec2& sigma, double y) {
    if (!std::isfinite(y))
        throw std::invalid_argument("mother_hat: y must be finite");
    if (y < 0.0 && (spec.sector == Sector::d3 || spec.sector == Sector::d4))
        throw std::domain_error(
            "mother_hat: y < 0 is not allowed for the evanescent sectors (the field "
            "grows exponentially below the boundary)");

    const auto sector = classify(sigma.t, sigma.x);
    if (!sector.has_value() || *sector != spec.sector) return Complex(0.0, 0.0);

    switch (spec.sector) {
        case Sector::d1: return forward_mother(spec, sigma.t, sigma.x, y);
        case Sector::d2: return forward_mother(spec, -sigma.t, sigma.x, y);
        case Sector::d3: return evanescent_mother(spec, sigma.t, sigma.x, y);
        case Sector::d4: return evanescent_mother(spec, sigma.t, -sigma.x, y);
    }
    return Complex(0.0, 0.0);
}

Complex family_hat(const MotherSpec& spec, const WaveletPoint& mu, const Vec2& sigma,
                   double y) {
    if (!(mu.scale > 0.0) || !std::isfinite(mu.scale))
        throw std::invalid_argument("family_hat: scale must be positive and finite");
    if (!std::isfinite(mu.rapidity))
        throw std::invalid_argument("family_hat: rapidity must be finite");

    const Vec2 arg = spectral_boost_scale(sigma, mu.scale, mu.rapidity);
    const Complex m = mother_hat(spec, arg, y / mu.scale);
    if (m == Complex(0.0, 0.0)) return m;
    // e^{-i(sigma,b)} with (sigma,b) = -sigma_t*b_ct + k_x*b_x
    const Complex shift = std::polar(1.0, sigma.t * mu.shift_ct - sigma.x * mu.shift_x);
    return mu.scale * m * shift;
}

AdmissibilityResult admissibility_constant(const MotherSpec& spec,
                                           const AdmissibilityOptions& options) {
    // Truncated rectangle: the radial Gaussian dies within 10/sigma_par of
    // kappa and, with the regulariser, exp(-2/rho) wipes the small-rho end.
    double rho_lo = options.rho_min;
    if (!(rho_lo > 0.0)) {
        rho_lo = spec.kappa - 10.0 / spec.sigma_par;
        if (rho_lo < 1e-4) rho_lo = 1e-4;
    }
    const double rho_hi = spec.kappa + 10.0 / spec.sigma_par;
    if (!(rho_hi > rho_lo))
        throw std::invalid_argument("admissibility_constant: empty radial domain");
    // Transverse range widest at the smallest live rho.
    const double rho_ref = std::max(rho_lo, options.drop_cone_regularizer ? rho_lo : 0.02);
    const double phi_max = std::asinh(10.0 / (spec.sigma_perp * rho_ref));

    auto integrate = [&](std::size_t n_rho, std::size_t n_phi, std::size_t& evals) {
        const double h_rho = (rho_hi - rho_lo) / static_cast<double>(n_rho - 1);
        const double h_phi = 2.0 * phi_max / static_cast<double>(n_phi - 1);
        double total = 0.0;
        for (std::size_t i = 0; i < n_rho; ++i) {
            const double rho = rho_lo + static_cast<double>(i) * h_rho;
            const double w_rho = (i == 0 || i == n_rho - 1) ? 0.5 : 1.0;
            double row = 0.0;
            for (std::size_t j = 0; j < n_phi; ++j) {
                const double phi0 = -phi_max + static_cast<double>(j) * h_phi;
                const double w_phi = (j == 0 || j == n_phi - 1) ? 0.5 : 1.0;
                const double p = detail::mother_profile_hyperbolic(
                    spec, rho, phi0, options.drop_cone_regularizer);
                row += w_phi * p * p;
                ++evals;
            }
            total += w_rho * row / rho;
        }
        return total * h_rho * h_phi;
    };

    AdmissibilityResult result;
    std::size_t n_rho = options.initial_rho;
    std::size_t n_phi = options.initial_phi;
    double previous = integrate(n_rho, n_phi, result.evaluations);
    result.value = previous;
    result.error_estimate = std::abs(previous);
    for (std::size_t level = 0; level < options.max_doublings; ++level) {
        n_rho = 2 * (n_rho - 1) + 1;
        n_phi = 2 * (n_phi - 1) + 1;
        const double current = integrate(n_rho, n_phi, result.evaluations);
        result.value = current;
        result.error_estimate = std::abs(current - previous);
        if (result.error_estimate <= options.rel_tol * std::abs(current)) return result;
        previous = current;
    }
    return result;
}

TimeSlice mother_time_slice(const MotherSpec& spec, double ct, const Grid2D& window) {
    if (spec.sector != Sector::d1)
        throw std::invalid_argument(
            "mother_time_slice: implemented for the sector-1 mother; mirror the "
            "arguments for sectors 2-4");
    if (!std::isfinite(ct))
        throw std::invalid_argument("mother_time_slice: ct must be finite");

    // Window rows sample y (dual axis k_y), columns sample x (dual axis k_x).
    ComplexMatrix uhat(window.n_t, window.n_x);
    for (std::size_t r = 0; r < window.n_t; ++r) {
        const double k_y = window.sigma_t(r);
        if (!(k_y > 0.0)) continue;  // the mother occupies the k_y > 0 half-plane
        for (std::size_t c = 0; c < window.n_x; ++c) {
            const double k_x = window.k_x(c);
            const double d_par = spec.sigma_par * (k_y - spec.kappa);
            const double d_perp = spec.sigma_perp * k_x;
            const double exponent =
                -0.5 * d_par * d_par - 0.5 * d_perp * d_perp - 1.0 / k_y;
            if (exponent < kMinExponent) continue;
            const double k = std::hypot(k_x, k_y);
            uhat(r, c) = std::polar(std::exp(exponent), -k * ct);
        }
    }

    TimeSlice slice;
    slice.window = window;
    slice.values = spatial_synthesis(window, uhat);

    double edge = 0.0, total = 0.0;
    for (std::size_t r = 0; r < window.n_t; ++r) {
        for (std::size_t c = 0; c < window.n_x; ++c) {
            const double e = std::norm(slice.values(r, c));
            total += e;
            const bool border = r < 2 || c < 2 || r + 2 >= window.n_t || c + 2 >= window.n_x;
            if (border) edge += e;
        }
    }
    slice.edge_energy_fraction = total > 0.0 ? edge / total : 0.0;
    slice.window_warning = slice.edge_energy_fraction > 0.01;
    return slice;
}

}  // namespace apwt
