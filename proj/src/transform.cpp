#include "apwt/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "apwt/parallel.hpp"
#include "apwt/sectors.hpp"

namespace apwt {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMinExponent = -745.0;

/// |mother_hat(a Lambda_phi sigma, 0)|^2 with precomputed cosh/sinh of phi.
/// Mirrors the formulas in wavelets.cpp; the diagram unit tests pin the two
/// code paths against each other.
double family_weight_squared(const MotherSpec& spec, double sigma_t, double k_x, double a,
                             double ch, double sh) {
    double k = a * (ch * sigma_t - sh * k_x);
    double q = a * (-sh * sigma_t + ch * k_x);
    switch (spec.sector) {
        case Sector::d2: k = -k; break;
        case Sector::d4: q = -q; break;
        default: break;
    }
    if (spec.sector == Sector::d1 || spec.sector == Sector::d2) {
        if (!(k > std::abs(q))) return 0.0;
        const double k_y = std::sqrt((k - q) * (k + q));
        const double d_par = spec.sigma_par * (k_y - spec.kappa);
        const double d_perp = spec.sigma_perp * q;
        const double exponent = -d_par * d_par - d_perp * d_perp - 2.0 / k_y;
        if (exponent < kMinExponent) return 0.0;
        const double ratio = k / k_y;
        return ratio * ratio * std::exp(exponent);
    }
    if (!(q > std::abs(k))) return 0.0;
    const double s = std::sqrt((q - k) * (q + k));
    const double d_par = spec.sigma_par * (s - spec.kappa);
    const double d_perp = spec.sigma_perp * k;
    const double exponent = -d_par * d_par - d_perp * d_perp - 2.0 / s;
    if (exponent < kMinExponent) return 0.0;
    const double ratio = q / s;
    return ratio * ratio * std::exp(exponent);
}

struct ActiveBin {
    double sigma_t;
    double k_x;
    double weight;  ///< |fhat|^2
};

/// In-sector bins carrying at least `rel_threshold` of the strongest
/// in-sector bin.
std::vector<ActiveBin> collect_active_bins(const Spectrum& fhat, Sector sector,
                                           double rel_threshold) {
    const Grid2D& g = fhat.signal_grid;
    double peak = 0.0;
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            if (!in_sector(st, g.k_x(c), sector)) continue;
            peak = std::max(peak, std::norm(fhat.values(r, c)));
        }
    }
    std::vector<ActiveBin> bins;
    if (peak == 0.0) return bins;
    const double cut = rel_threshold * peak;
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const double kx = g.k_x(c);
            if (!in_sector(st, kx, sector)) continue;
            const double w = std::norm(fhat.values(r, c));
            if (w >= cut) bins.push_back({st, kx, w});
        }
    }
    return bins;
}

/// sum over bins of |fhat|^2 |mother_hat(a Lambda_phi sigma)|^2 (no measure).
double weighted_energy(const MotherSpec& spec, const std::vector<ActiveBin>& bins, double a,
                       double ch, double sh) {
    double acc = 0.0;
    for (const ActiveBin& bin : bins)
        acc += bin.weight * family_weight_squared(spec, bin.sigma_t, bin.k_x, a, ch, sh);
    return acc;
}

}  // namespace

ScaleAxis::ScaleAxis(double a_min_, double a_max_, std::size_t count_)
    : a_min(a_min_), a_max(a_max_), count(count_) {
    if (!(a_min > 0.0) || !(a_max > a_min))
        throw std::invalid_argument("ScaleAxis: need 0 < a_min < a_max");
    if (count < 2) throw std::invalid_argument("ScaleAxis: need at least 2 samples");
}

double ScaleAxis::log_step() const {
    return std::log(a_max / a_min) / static_cast<double>(count - 1);
}

double ScaleAxis::value(std::size_t i) const {
    return a_min * std::exp(static_cast<double>(i) * log_step());
}

double ScaleAxis::cell_weight(std::size_t i) const {
    const double a = value(i);
    return std::sinh(log_step()) / (a * a);
}

RapidityAxis::RapidityAxis(double phi_min_, double phi_max_, std::size_t count_)
    : phi_min(phi_min_), phi_max(phi_max_), count(count_) {
    if (!(phi_max > phi_min)) throw std::invalid_argument("RapidityAxis: need phi_min < phi_max");
    if (count < 2) throw std::invalid_argument("RapidityAxis: need at least 2 samples");
}

double RapidityAxis::step() const {
    return (phi_max - phi_min) / static_cast<double>(count - 1);
}

double RapidityAxis::value(std::size_t i) const {
    return phi_min + static_cast<double>(i) * step();
}

double RapidityAxis::cell_weight(std::size_t i) const {
    const double w = step();
    return (i == 0 || i == count - 1) ? 0.5 * w : w;
}

MuSampling MuSampling::production(double a_center) {
    if (!(a_center > 0.0))
        throw std::invalid_argument("MuSampling::production: a_center must be positive");
    MuSampling s;
    s.phi = RapidityAxis(-1.5, 1.5, 61);
    s.scale = ScaleAxis(a_center / 4.0, a_center * 4.0, 65);
    return s;
}

MuSampling MuSampling::refined(double factor) const {
    if (!(factor > 0.0)) throw std::invalid_argument("MuSampling::refined: factor must be positive");
    auto scaled = [factor](std::size_t count) {
        const double intervals = std::max(1.0, std::round(static_cast<double>(count - 1) * factor));
        return static_cast<std::size_t>(intervals) + 1;
    };
    MuSampling s;
    s.phi = RapidityAxis(phi.phi_min, phi.phi_max, scaled(phi.count));
    s.scale = ScaleAxis(scale.a_min, scale.a_max, scaled(scale.count));
    return s;
}

double dominant_scale(const Spectrum& fhat, const MotherSpec& spec) {
    const Grid2D& g = fhat.signal_grid;
    double weight_sum = 0.0;
    double log_sum = 0.0;
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const double kx = g.k_x(c);
            if (!in_sector(st, kx, spec.sector)) continue;
            const double w = std::norm(fhat.values(r, c));
            if (w == 0.0) continue;
            const double rho2 = (spec.sector == Sector::d1 || spec.sector == Sector::d2)
                                    ? (st - kx) * (st + kx)
                                    : (kx - st) * (kx + st);
            log_sum += w * 0.5 * std::log((spec.kappa * spec.kappa) / rho2);
            weight_sum += w;
        }
    }
    if (weight_sum == 0.0)
        throw std::domain_error("dominant_scale: sector " + sector_name(spec.sector) +
                                " carries no energy");
    return std::exp(log_sum / weight_sum);
}

Complex apwt_point(const Spectrum& fhat, const MotherSpec& spec, const WaveletPoint& mu) {
    const Grid2D& g = fhat.signal_grid;
    Complex acc(0.0, 0.0);
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const Complex w = family_hat(spec, mu, Vec2{st, g.k_x(c)}, 0.0);
            if (w == Complex(0.0, 0.0)) continue;
            acc += fhat.values(r, c) * std::conj(w);
        }
    }
    return acc * (g.dsigma_t() * g.dk_x() / (kTwoPi * kTwoPi));
}

Complex apwt_point_direct(const BoundarySignal& f, const MotherSpec& spec,
                          const WaveletPoint& mu) {
    const Grid2D& g = f.grid;
    ComplexMatrix psi_hat(g.n_t, g.n_x);
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c)
            psi_hat(r, c) = family_hat(spec, mu, Vec2{st, g.k_x(c)}, 0.0);
    }
    const BoundarySignal psi = inverse_fourier(Spectrum(g, std::move(psi_hat)));
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < psi.values.size(); ++i)
        acc += f.values.values()[i] * std::conj(psi.values.values()[i]);
    return acc * (g.dt * g.dx);
}

ComplexMatrix apwt_slab(const Spectrum& fhat, const MotherSpec& spec, double a, double phi) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("apwt_slab: scale must be positive and finite");
    const Grid2D& g = fhat.signal_grid;
    ComplexMatrix weighted(g.n_t, g.n_x);
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const Vec2 arg = spectral_boost_scale(Vec2{st, g.k_x(c)}, a, phi);
            const Complex m = mother_hat(spec, arg, 0.0);
            if (m == Complex(0.0, 0.0)) continue;
            weighted(r, c) = fhat.values(r, c) * a * std::conj(m);
        }
    }
    return inverse_fourier(Spectrum(g, std::move(weighted))).values;
}

CoefficientGrid apwt_grid(const Spectrum& fhat, const MotherSpec& spec,
                          const MuSampling& sampling) {
    const Grid2D& g = fhat.signal_grid;
    const std::size_t cells = sampling.phi.count * sampling.scale.count;
    const std::size_t total = cells * g.count();
    constexpr std::size_t kMaxBytes = std::size_t(2) << 30;
    if (total > kMaxBytes / sizeof(Complex))
        throw std::invalid_argument(
            "apwt_grid: coefficient grid would exceed 2 GiB; reduce the sampling or the "
            "signal grid, or use the streamed reconstruction");

    CoefficientGrid out;
    out.mother = spec;
    out.b_grid = g;
    out.phi_axis = sampling.phi;
    out.scale_axis = sampling.scale;
    out.values.resize(total);
    for (std::size_t ip = 0; ip < sampling.phi.count; ++ip) {
        const double phi = sampling.phi.value(ip);
        for (std::size_t ia = 0; ia < sampling.scale.count; ++ia) {
            const ComplexMatrix slab = apwt_slab(fhat, spec, sampling.scale.value(ia), phi);
            std::copy(slab.values().begin(), slab.values().end(),
                      out.values.begin() + static_cast<std::ptrdiff_t>(
                                               out.index(ip, ia, 0, 0)));
        }
    }
    return out;
}

PlancherelReport plancherel_check(const BoundarySignal& f, const MotherSpec& spec,
                                  const MuSampling& sampling,
                                  const PlancherelOptions& options) {
    const Spectrum fhat = forward_fourier(f);
    const Spectrum masked = sector_mask(fhat, spec.sector);

    PlancherelReport report;
    report.sector_norm_squared = masked.norm_squared();
    if (report.sector_norm_squared == 0.0) {
        report.sector_empty = true;
        return report;
    }
    report.admissibility = admissibility_constant(spec).value;

    const std::vector<ActiveBin> bins = collect_active_bins(fhat, spec.sector, 1e-14);
    const Grid2D& g = f.grid;
    const double bin_measure = g.dsigma_t() * g.dk_x() / (kTwoPi * kTwoPi);
    const double tamper = options.tamper_family_norm * options.tamper_family_norm;

    auto lhs_for = [&](const MuSampling& s) {
        std::vector<double> cell(s.phi.count * s.scale.count, 0.0);
        parallel_for(s.phi.count, [&](std::size_t ip) {
            const double phi = s.phi.value(ip);
            const double ch = std::cosh(phi);
            const double sh = std::sinh(phi);
            for (std::size_t ia = 0; ia < s.scale.count; ++ia) {
                const double a = s.scale.value(ia);
                // da/a^3 cell weight times the Parseval b-integral a^2 |...|^2
                const double w = s.phi.cell_weight(ip) * s.scale.cell_weight(ia) * a * a;
                cell[ip * s.scale.count + ia] =
                    w * weighted_energy(spec, bins, a, ch, sh);
            }
        });
        double acc = 0.0;
        for (double v : cell) acc += v;  // fixed order, thread-count independent
        return acc * bin_measure * tamper;
    };

    // Refinement ladder: half density, the requested sampling, then doublings.
    std::vector<double> factors;
    factors.push_back(0.5);
    factors.push_back(1.0);
    for (std::size_t l = 2; l < std::max<std::size_t>(options.ladder_levels, 2); ++l)
        factors.push_back(std::pow(2.0, static_cast<double>(l - 1)));

    const double rhs = report.admissibility * report.sector_norm_squared;
    for (double factor : factors)
        report.ladder_ratios.push_back(lhs_for(sampling.refined(factor)) / rhs);
    report.ratio = report.ladder_ratios[1];

    report.stabilizing = true;
    for (std::size_t i = 1; i < report.ladder_ratios.size(); ++i) {
        const double prev = std::abs(report.ladder_ratios[i - 1] - 1.0);
        const double curr = std::abs(report.ladder_ratios[i] - 1.0);
        if (curr > prev + 1e-4) report.stabilizing = false;
    }
    return report;
}

BoundarySignal reconstruct(const CoefficientGrid& coeffs, double admissibility, double y,
                           const Grid2D& out_grid) {
    if (!(admissibility > 0.0) || !std::isfinite(admissibility))
        throw std::invalid_argument("reconstruct: admissibility constant must be positive");
    if (!(out_grid == coeffs.b_grid))
        throw std::invalid_argument(
            "reconstruct: output grid must match the coefficient b-grid (resampling is not "
            "supported)");
    const Grid2D& g = coeffs.b_grid;
    const MotherSpec& spec = coeffs.mother;

    ComplexMatrix acc(g.n_t, g.n_x);
    ComplexMatrix slab(g.n_t, g.n_x);
    for (std::size_t ip = 0; ip < coeffs.phi_axis.count; ++ip) {
        const double phi = coeffs.phi_axis.value(ip);
        const double w_phi = coeffs.phi_axis.cell_weight(ip);
        for (std::size_t ia = 0; ia < coeffs.scale_axis.count; ++ia) {
            const double a = coeffs.scale_axis.value(ia);
            const double w = w_phi * coeffs.scale_axis.cell_weight(ia);
            std::copy_n(coeffs.values.begin() +
                            static_cast<std::ptrdiff_t>(coeffs.index(ip, ia, 0, 0)),
                        g.count(), slab.values().begin());
            const Spectrum slab_hat = forward_fourier(BoundarySignal(g, slab));
            for (std::size_t r = 0; r < g.n_t; ++r) {
                const double st = g.sigma_t(r);
                for (std::size_t c = 0; c < g.n_x; ++c) {
                    const Vec2 arg = spectral_boost_scale(Vec2{st, g.k_x(c)}, a, phi);
                    const Complex m = mother_hat(spec, arg, y / a);
                    if (m == Complex(0.0, 0.0)) continue;
                    acc(r, c) += w * a * m * slab_hat.values(r, c);
                }
            }
        }
    }
    for (Complex& v : acc.values()) v /= admissibility;
    return inverse_fourier(Spectrum(g, std::move(acc)));
}

BoundarySignal reconstruct_streamed(const BoundarySignal& f, const MotherSpec& spec,
                                    const MuSampling& sampling, double admissibility,
                                    double y) {
    if (!(admissibility > 0.0) || !std::isfinite(admissibility))
        throw std::invalid_argument("reconstruct_streamed: admissibility constant must be positive");
    const Spectrum fhat = forward_fourier(f);
    const Grid2D& g = f.grid;

    // Only bins carrying signal can contribute; skipping the empty ones saves
    // the two mother evaluations per (bin, cell) pair.
    double peak = 0.0;
    for (const Complex& v : fhat.values.values()) peak = std::max(peak, std::norm(v));
    const double cut = 1e-28 * peak;

    struct Bin {
        std::size_t row, col;
        double sigma_t, k_x;
    };
    std::vector<Bin> bins;
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c)
            if (std::norm(fhat.values(r, c)) > cut) bins.push_back({r, c, st, g.k_x(c)});
    }

    ComplexMatrix acc(g.n_t, g.n_x);
    for (std::size_t ip = 0; ip < sampling.phi.count; ++ip) {
        const double phi = sampling.phi.value(ip);
        const double w_phi = sampling.phi.cell_weight(ip);
        for (std::size_t ia = 0; ia < sampling.scale.count; ++ia) {
            const double a = sampling.scale.value(ia);
            const double w = w_phi * sampling.scale.cell_weight(ia) * a * a;
            for (const Bin& bin : bins) {
                const Vec2 arg = spectral_boost_scale(Vec2{bin.sigma_t, bin.k_x}, a, phi);
                const Complex m0 = mother_hat(spec, arg, 0.0);
                if (m0 == Complex(0.0, 0.0)) continue;
                const Complex my = (y == 0.0) ? m0 : mother_hat(spec, arg, y / a);
                acc(bin.row, bin.col) += w * fhat.values(bin.row, bin.col) * my * std::conj(m0);
            }
        }
    }
    for (Complex& v : acc.values()) v /= admissibility;
    return inverse_fourier(Spectrum(g, std::move(acc)));
}

Diagram scale_rapidity_diagram(const BoundarySignal& f, const MotherSpec& spec,
                               const MuSampling& sampling, const DiagramOptions& options) {
    Diagram out;
    out.scale_axis = sampling.scale;
    out.phi_axis = sampling.phi;
    out.values.assign(sampling.scale.count * sampling.phi.count, 0.0);

    const Grid2D& g = f.grid;
    if (options.path == DiagramPath::direct) {
        const Spectrum fhat = forward_fourier(f);
        for (std::size_t ia = 0; ia < sampling.scale.count; ++ia) {
            const double a = sampling.scale.value(ia);
            for (std::size_t ip = 0; ip < sampling.phi.count; ++ip) {
                const ComplexMatrix slab =
                    apwt_slab(fhat, spec, a, sampling.phi.value(ip));
                out.at(ia, ip) = squared_sum(slab) * g.dt * g.dx / (a * a * a);
            }
        }
        return out;
    }

    const Spectrum fhat = forward_fourier(f);
    const std::vector<ActiveBin> bins =
        collect_active_bins(fhat, spec.sector, options.prune_rel_threshold);
    const double bin_measure = g.dsigma_t() * g.dk_x() / (kTwoPi * kTwoPi);
    parallel_for(sampling.phi.count, [&](std::size_t ip) {
        const double phi = sampling.phi.value(ip);
        const double ch = std::cosh(phi);
        const double sh = std::sinh(phi);
        for (std::size_t ia = 0; ia < sampling.scale.count; ++ia) {
            const double a = sampling.scale.value(ia);
            out.at(ia, ip) = weighted_energy(spec, bins, a, ch, sh) * bin_measure / a;
        }
    });
    return out;
}

std::vector<Peak> detect_peaks(const Diagram& diagram, std::size_t count,
                               double freq_calibration) {
    if (!(freq_calibration > 0.0) || !std::isfinite(freq_calibration))
        throw std::invalid_argument("detect_peaks: frequency calibration must be positive");
    const std::size_t na = diagram.scale_axis.count;
    const std::size_t np = diagram.phi_axis.count;

    auto parabola_offset = [](double sm, double s0, double sp) {
        const double denom = sm - 2.0 * s0 + sp;
        if (denom >= 0.0) return 0.0;  // not a proper maximum; stay on the cell
        double d = 0.5 * (sm - sp) / denom;
        return std::clamp(d, -0.5, 0.5);
    };

    std::vector<Peak> peaks;
    for (std::size_t ia = 1; ia + 1 < na; ++ia) {
        for (std::size_t ip = 1; ip + 1 < np; ++ip) {
            const double s0 = diagram.at(ia, ip);
            bool is_max = s0 > 0.0;
            for (int da = -1; da <= 1 && is_max; ++da)
                for (int dp = -1; dp <= 1 && is_max; ++dp) {
                    if (da == 0 && dp == 0) continue;
                    is_max = s0 > diagram.at(ia + static_cast<std::size_t>(da),
                                             ip + static_cast<std::size_t>(dp));
                }
            if (!is_max) continue;

            const double sa_m = diagram.at(ia - 1, ip), sa_p = diagram.at(ia + 1, ip);
            const double sp_m = diagram.at(ia, ip - 1), sp_p = diagram.at(ia, ip + 1);
            const double da = parabola_offset(sa_m, s0, sa_p);
            const double dp = parabola_offset(sp_m, s0, sp_p);

            Peak peak;
            peak.cell_a = ia;
            peak.cell_phi = ip;
            peak.scale = std::exp(std::log(diagram.scale_axis.value(ia)) +
                                  da * diagram.scale_axis.log_step());
            peak.rapidity = diagram.phi_axis.value(ip) + dp * diagram.phi_axis.step();
            peak.height = s0 - 0.25 * (sa_m - sa_p) * da - 0.25 * (sp_m - sp_p) * dp;
            peak.omega = freq_calibration / peak.scale;
            peak.v_over_c = std::tanh(peak.rapidity);
            peaks.push_back(peak);
        }
    }

    std::sort(peaks.begin(), peaks.end(), [](const Peak& l, const Peak& r) {
        if (l.height != r.height) return l.height > r.height;
        if (l.scale != r.scale) return l.scale < r.scale;
        return l.rapidity < r.rapidity;
    });
    if (peaks.size() > count) peaks.resize(count);
    return peaks;
}

}  // namespace apwt
