#include <cmath>
#include <complex>
#include <doctest.h>
#include <random>
#include <vector>

#include "apwt/fourier.hpp"
#include "apwt/sectors.hpp"
#include "apwt/transform.hpp"
#include "apwt/wavelets.hpp"
#include "helpers.hpp"

using namespace apwt;
using apwt_test::random_signal;
using apwt_test::uniform_in;

namespace {

Spectrum family_spectrum(const Grid2D& grid, const MotherSpec& spec, const WaveletPoint& mu,
                         double y = 0.0) {
    ComplexMatrix values(grid.n_t, grid.n_x);
    for (std::size_t r = 0; r < grid.n_t; ++r)
        for (std::size_t c = 0; c < grid.n_x; ++c)
            values(r, c) = family_hat(spec, mu, {grid.sigma_t(r), grid.k_x(c)}, y);
    return Spectrum(grid, std::move(values));
}

}  // namespace

TEST_CASE("scale axis is log-uniform with exact cell weights") {
    const ScaleAxis axis(0.5, 8.0, 9);
    CHECK(axis.value(0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(axis.value(8) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(axis.log_step() == doctest::Approx(std::log(16.0) / 8.0).epsilon(1e-15));
    for (std::size_t i = 0; i < axis.count; ++i) {
        CHECK(axis.cell_weight(i) ==
              doctest::Approx(std::sinh(axis.log_step()) / (axis.value(i) * axis.value(i)))
                  .epsilon(1e-14));
        if (i > 0)
            CHECK(std::log(axis.value(i) / axis.value(i - 1)) ==
                  doctest::Approx(axis.log_step()).epsilon(1e-12));
    }
    CHECK_THROWS_AS(ScaleAxis(1.0, 2.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(ScaleAxis(2.0, 1.0, 5), std::invalid_argument);
    CHECK_THROWS_AS(ScaleAxis(0.0, 1.0, 5), std::invalid_argument);
}

TEST_CASE("rapidity axis is uniform with trapezoid weights") {
    const RapidityAxis axis(-1.5, 1.5, 61);
    CHECK(axis.step() == doctest::Approx(0.05).epsilon(1e-15));
    CHECK(axis.value(0) == doctest::Approx(-1.5));
    CHECK(axis.value(60) == doctest::Approx(1.5));
    double total = 0.0;
    for (std::size_t i = 0; i < axis.count; ++i) total += axis.cell_weight(i);
    CHECK(total == doctest::Approx(3.0).epsilon(1e-13));  // the full interval
    CHECK(axis.cell_weight(0) == doctest::Approx(0.025));
    CHECK(axis.cell_weight(30) == doctest::Approx(0.05));
    CHECK_THROWS_AS(RapidityAxis(0.5, -0.5, 5), std::invalid_argument);
    CHECK_THROWS_AS(RapidityAxis(-1.0, 1.0, 1), std::invalid_argument);
}

TEST_CASE("production sampling and refinement") {
    const MuSampling s = MuSampling::production(2.0);
    CHECK(s.phi.count == 61);
    CHECK(s.phi.phi_min == doctest::Approx(-1.5));
    CHECK(s.phi.phi_max == doctest::Approx(1.5));
    CHECK(s.scale.count == 65);
    CHECK(s.scale.a_min == doctest::Approx(0.5));
    CHECK(s.scale.a_max == doctest::Approx(8.0));

    const MuSampling fine = s.refined(2.0);
    CHECK(fine.phi.count == 121);
    CHECK(fine.scale.count == 129);
    CHECK(fine.scale.a_min == doctest::Approx(0.5));
    CHECK(fine.scale.a_max == doctest::Approx(8.0));

    CHECK_THROWS_AS(MuSampling::production(0.0), std::invalid_argument);
    CHECK_THROWS_AS(MuSampling::production(-1.0), std::invalid_argument);
}

TEST_CASE("dominant scale aligns the radial gaussian with one-bin signals") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 3.0, 2.0);

    // Single occupied bin at hyperbolic radius rho: dominant scale kappa/rho.
    ComplexMatrix one(32, 32);
    const std::size_t r1 = 24, c1 = 18;
    one(r1, c1) = Complex(0.7, -0.2);
    const Spectrum single(grid, one);
    REQUIRE(in_sector(single.sigma_t(r1), single.k_x(c1), Sector::d1));
    const double rho1 = std::sqrt(single.sigma_t(r1) * single.sigma_t(r1) -
                                  single.k_x(c1) * single.k_x(c1));
    CHECK(dominant_scale(single, spec) == doctest::Approx(4.0 / rho1).epsilon(1e-12));

    // Two bins with equal energy: geometric mean of the single-bin answers.
    ComplexMatrix two(32, 32);
    const std::size_t r2 = 28, c2 = 12;
    two(r1, c1) = Complex(1.0, 0.0);
    two(r2, c2) = Complex(0.0, -1.0);
    const Spectrum pair(grid, two);
    REQUIRE(in_sector(pair.sigma_t(r2), pair.k_x(c2), Sector::d1));
    const double rho2 = std::sqrt(pair.sigma_t(r2) * pair.sigma_t(r2) -
                                  pair.k_x(c2) * pair.k_x(c2));
    CHECK(dominant_scale(pair, spec) ==
          doctest::Approx(4.0 / std::sqrt(rho1 * rho2)).epsilon(1e-12));

    // No energy in the requested sector: refuse rather than invent a center.
    const Spectrum empty(grid, ComplexMatrix(32, 32));
    CHECK_THROWS_AS(dominant_scale(empty, spec), std::domain_error);
    CHECK_THROWS_AS(dominant_scale(sector_mask(single, Sector::d3), spec),
                    std::domain_error);
}

TEST_CASE("transform of a family member recovers its own norm") {
    const Grid2D grid(48, 48, 0.5, 0.5, -12.0, -12.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    const WaveletPoint mu{1.0, -2.5, 1.3, 0.25};
    const Spectrum psi_hat = family_spectrum(grid, spec, mu);
    const BoundarySignal psi = inverse_fourier(psi_hat);

    const Complex self = apwt_point(forward_fourier(psi), spec, mu);
    const double norm2 = psi.norm_squared();
    CHECK(self.real() == doctest::Approx(norm2).epsilon(1e-12));
    CHECK(std::abs(self.imag()) < 1e-12 * norm2);
}

TEST_CASE("signals and analyzers in disjoint sectors never couple") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const Spectrum fhat = forward_fourier(random_signal(grid, 301));
    const Spectrum d1_only(grid, sector_mask(fhat, Sector::d1).values);
    const MotherSpec d3_spec(Sector::d3, 2.0, 1.5, 1.5);

    const WaveletPoint mu{0.5, 0.5, 1.0, 0.1};
    CHECK(apwt_point(d1_only, d3_spec, mu) == Complex(0.0, 0.0));
    const ComplexMatrix slab = apwt_slab(d1_only, d3_spec, 1.0, 0.1);
    CHECK(squared_sum(slab) == 0.0);
}

TEST_CASE("spectral point, direct quadrature and fft slab agree") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    const BoundarySignal f = random_signal(grid, 302);
    const Spectrum fhat = forward_fourier(f);

    std::mt19937_64 engine(303);
    for (int trial = 0; trial < 6; ++trial) {
        const double a = std::exp(uniform_in(engine, -0.5, 0.5));
        const double phi = uniform_in(engine, -0.6, 0.6);
        const std::size_t row = engine() % grid.n_t;
        const std::size_t col = engine() % grid.n_x;
        const WaveletPoint mu{grid.ct(row), grid.x(col), a, phi};

        const Complex point = apwt_point(fhat, spec, mu);
        const Complex direct = apwt_point_direct(f, spec, mu);
        const ComplexMatrix slab = apwt_slab(fhat, spec, a, phi);
        const double scale_ref = std::max(1e-30, std::abs(direct));
        CHECK(std::abs(point - direct) / scale_ref < 1e-10);
        CHECK(std::abs(slab(row, col) - direct) / scale_ref < 1e-10);
    }
}

TEST_CASE("transform is linear") {
    const Grid2D grid(24, 24, 0.5, 0.5, -6.0, -6.0);
    const MotherSpec spec(Sector::d1, 3.0, 1.5, 1.5);
    const Spectrum f = forward_fourier(random_signal(grid, 304));
    const Spectrum g = forward_fourier(random_signal(grid, 305));
    const Complex alpha(0.3, -1.1), beta(-0.7, 0.2);

    ComplexMatrix mixed(grid.n_t, grid.n_x);
    for (std::size_t i = 0; i < mixed.size(); ++i)
        mixed.values()[i] = alpha * f.values.values()[i] + beta * g.values.values()[i];
    const Spectrum combo(grid, std::move(mixed));

    const WaveletPoint mu{0.5, -1.0, 0.8, -0.2};
    const Complex lhs = apwt_point(combo, spec, mu);
    const Complex rhs = alpha * apwt_point(f, spec, mu) + beta * apwt_point(g, spec, mu);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
}

TEST_CASE("coefficients obey the cauchy-schwarz bound") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    const Spectrum fhat = forward_fourier(random_signal(grid, 306));
    const double f_norm = std::sqrt(fhat.norm_squared());

    std::mt19937_64 engine(307);
    for (int trial = 0; trial < 20; ++trial) {
        const WaveletPoint mu{uniform_in(engine, -4.0, 4.0), uniform_in(engine, -4.0, 4.0),
                              std::exp(uniform_in(engine, -0.7, 0.7)),
                              uniform_in(engine, -0.8, 0.8)};
        const double psi_norm =
            std::sqrt(inverse_fourier(family_spectrum(grid, spec, mu)).norm_squared());
        CHECK(std::abs(apwt_point(fhat, spec, mu)) <= f_norm * psi_norm * (1.0 + 1e-12));
    }
}

TEST_CASE("cyclic shift covariance of the slab") {
    const Grid2D grid(24, 24, 0.5, 0.5, -6.0, -6.0);
    const MotherSpec spec(Sector::d1, 3.0, 1.5, 1.5);
    const BoundarySignal f = random_signal(grid, 308);

    const std::size_t dr = 5, dc = 17;
    ComplexMatrix rolled(24, 24);
    for (std::size_t r = 0; r < 24; ++r)
        for (std::size_t c = 0; c < 24; ++c)
            rolled((r + dr) % 24, (c + dc) % 24) = f.values(r, c);

    const ComplexMatrix slab = apwt_slab(forward_fourier(f), spec, 1.2, 0.3);
    const ComplexMatrix slab_rolled =
        apwt_slab(forward_fourier(BoundarySignal(grid, rolled)), spec, 1.2, 0.3);

    double worst = 0.0, ref = 0.0;
    for (std::size_t r = 0; r < 24; ++r) {
        for (std::size_t c = 0; c < 24; ++c) {
            worst = std::max(worst,
                             std::abs(slab_rolled((r + dr) % 24, (c + dc) % 24) - slab(r, c)));
            ref = std::max(ref, std::abs(slab(r, c)));
        }
    }
    CHECK(worst / ref < 1e-12);
}

TEST_CASE("slab of an on-lattice plane wave has constant modulus") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    ComplexMatrix one(32, 32);
    const std::size_t rb = 26, cb = 19;
    one(rb, cb) = Complex(1.0, 0.0);
    const Spectrum wave(grid, one);
    REQUIRE(in_sector(wave.sigma_t(rb), wave.k_x(cb), Sector::d1));

    const ComplexMatrix slab = apwt_slab(wave, spec, 1.0, 0.2);
    double lo = 1e300, hi = 0.0;
    for (const Complex& v : slab.values()) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    CHECK(hi > 0.0);
    CHECK((hi - lo) / hi < 1e-12);
}

TEST_CASE("coefficient grid matches its slabs and refuses silly sizes") {
    const Grid2D grid(16, 16, 0.5, 0.5, -4.0, -4.0);
    const MotherSpec spec(Sector::d1, 3.0, 1.5, 1.5);
    const Spectrum fhat = forward_fourier(random_signal(grid, 309));
    MuSampling sampling;
    sampling.phi = RapidityAxis(-0.4, 0.4, 5);
    sampling.scale = ScaleAxis(0.8, 1.6, 4);

    const CoefficientGrid grid4d = apwt_grid(fhat, spec, sampling);
    CHECK(grid4d.b_grid == grid);
    CHECK(grid4d.values.size() == 5 * 4 * 16 * 16);
    for (std::size_t ip = 0; ip < 5; ++ip) {
        for (std::size_t ia = 0; ia < 4; ++ia) {
            const ComplexMatrix slab =
                apwt_slab(fhat, spec, sampling.scale.value(ia), sampling.phi.value(ip));
            for (std::size_t r = 0; r < 16; ++r)
                for (std::size_t c = 0; c < 16; ++c)
                    CHECK(grid4d.at(ip, ia, r, c) == slab(r, c));
        }
    }

    MuSampling huge;
    huge.phi = RapidityAxis(-1.5, 1.5, 257);
    huge.scale = ScaleAxis(0.5, 8.0, 2048);
    CHECK_THROWS_AS(apwt_grid(fhat, spec, huge), std::invalid_argument);
}

TEST_CASE("diagram fast path equals the slab-by-slab definition") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    const BoundarySignal f = random_signal(grid, 310);
    MuSampling sampling;
    sampling.phi = RapidityAxis(-0.6, 0.6, 7);
    sampling.scale = ScaleAxis(0.7, 1.8, 6);

    DiagramOptions fast;
    fast.prune_rel_threshold = 0.0;
    const Diagram quick = scale_rapidity_diagram(f, spec, sampling, fast);
    DiagramOptions direct;
    direct.path = DiagramPath::direct;
    const Diagram slow = scale_rapidity_diagram(f, spec, sampling, direct);

    double ref = 0.0;
    for (double v : slow.values) ref = std::max(ref, v);
    for (std::size_t ia = 0; ia < sampling.scale.count; ++ia)
        for (std::size_t ip = 0; ip < sampling.phi.count; ++ip)
            CHECK(std::abs(quick.at(ia, ip) - slow.at(ia, ip)) / ref < 1e-10);
}

TEST_CASE("diagram of a zero signal is zero") {
    const Grid2D grid(16, 16, 0.5, 0.5, -4.0, -4.0);
    const MotherSpec spec(Sector::d1, 3.0, 1.5, 1.5);
    const BoundarySignal zero(grid, ComplexMatrix(16, 16));
    MuSampling sampling;
    sampling.phi = RapidityAxis(-0.4, 0.4, 3);
    sampling.scale = ScaleAxis(0.8, 1.6, 3);
    const Diagram d = scale_rapidity_diagram(zero, spec, sampling, {});
    for (double v : d.values) CHECK(v == 0.0);
    CHECK(detect_peaks(d, 8, 3.0).empty());
}

TEST_CASE("plancherel report flags an empty sector and scales with tampering") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);

    // Nothing at all in the analysed sector: the flag is raised and the
    // report comes back before any ratio is formed.
    const BoundarySignal silent(grid, ComplexMatrix(grid.n_t, grid.n_x));
    const MuSampling sampling = MuSampling::production(1.0);
    const PlancherelReport empty = plancherel_check(silent, spec, sampling, {});
    CHECK(empty.sector_empty);
    CHECK(empty.sector_norm_squared == 0.0);
    CHECK(empty.ladder_ratios.empty());

    // Frequency axes for building the packet spectrum below.
    const Spectrum fhat(grid, ComplexMatrix(grid.n_t, grid.n_x));

    // A deliberate family-norm distortion moves the ratio quadratically.
    ComplexMatrix packet_hat(grid.n_t, grid.n_x);
    for (std::size_t r = 0; r < grid.n_t; ++r)
        for (std::size_t c = 0; c < grid.n_x; ++c)
            packet_hat(r, c) =
                mother_hat(spec, {fhat.sigma_t(r), fhat.k_x(c)}, 0.0);
    const BoundarySignal packet = inverse_fourier(Spectrum(grid, std::move(packet_hat)));
    const MuSampling centered =
        MuSampling::production(dominant_scale(forward_fourier(packet), spec));
    const PlancherelReport clean = plancherel_check(packet, spec, centered, {});
    PlancherelOptions tampered;
    tampered.tamper_family_norm = 1.05;
    const PlancherelReport skewed = plancherel_check(packet, spec, centered, tampered);
    CHECK_FALSE(clean.sector_empty);
    CHECK(skewed.ratio / clean.ratio == doctest::Approx(1.05 * 1.05).epsilon(1e-10));
}

TEST_CASE("reconstruction from a single coefficient is that family member") {
    const Grid2D grid(24, 24, 0.5, 0.5, -6.0, -6.0);
    const MotherSpec spec(Sector::d1, 3.0, 1.5, 1.5);

    CoefficientGrid coeffs;
    coeffs.mother = spec;
    coeffs.b_grid = grid;
    coeffs.phi_axis = RapidityAxis(-0.4, 0.4, 5);
    coeffs.scale_axis = ScaleAxis(0.8, 1.6, 4);
    coeffs.values.assign(5 * 4 * 24 * 24, Complex(0.0, 0.0));

    const std::size_t ip0 = 2, ia0 = 1, it0 = 7, ix0 = 15;
    coeffs.at(ip0, ia0, it0, ix0) = Complex(1.0, 0.0);

    const double admissibility = 0.37;  // any positive constant: it only rescales
    const double y = 0.6;
    const BoundarySignal rec = reconstruct(coeffs, admissibility, y, grid);

    const WaveletPoint mu{grid.ct(it0), grid.x(ix0), coeffs.scale_axis.value(ia0),
                          coeffs.phi_axis.value(ip0)};
    const BoundarySignal member = inverse_fourier(family_spectrum(grid, spec, mu, y));
    const double w = coeffs.phi_axis.cell_weight(ip0) * coeffs.scale_axis.cell_weight(ia0) *
                     grid.dt * grid.dx / admissibility;
    ComplexMatrix expected(24, 24);
    for (std::size_t i = 0; i < expected.size(); ++i)
        expected.values()[i] = member.values.values()[i] * w;

    CHECK(relative_l2_error(rec.values, expected) < 1e-12);
}

TEST_CASE("streamed reconstruction equals the materialised grid path") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    ComplexMatrix packet_hat(32, 32);
    for (std::size_t r = 0; r < 32; ++r)
        for (std::size_t c = 0; c < 32; ++c)
            packet_hat(r, c) = mother_hat(spec, {grid.sigma_t(r), grid.k_x(c)}, 0.0);
    const BoundarySignal f = inverse_fourier(Spectrum(grid, std::move(packet_hat)));

    MuSampling sampling;
    sampling.phi = RapidityAxis(-0.75, 0.75, 13);
    sampling.scale = ScaleAxis(0.5, 2.0, 13);
    const double admissibility = admissibility_constant(spec).value;

    for (double y : {0.0, 0.8}) {
        const BoundarySignal streamed =
            reconstruct_streamed(f, spec, sampling, admissibility, y);
        const CoefficientGrid coeffs = apwt_grid(forward_fourier(f), spec, sampling);
        const BoundarySignal materialised = reconstruct(coeffs, admissibility, y, grid);
        CHECK(relative_l2_error(streamed.values, materialised.values) < 1e-12);
    }

    CHECK_THROWS_AS(reconstruct_streamed(f, spec, sampling, 0.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        reconstruct(apwt_grid(forward_fourier(f), spec, sampling), admissibility, 0.0,
                    Grid2D(16, 16, 0.5, 0.5, 0.0, 0.0)),
        std::invalid_argument);
}

TEST_CASE("peak detection recovers separable quadratic bumps exactly") {
    Diagram d;
    d.scale_axis = ScaleAxis(1.0, std::exp(2.0), 33);  // ln a in [0, 2], step 1/16
    d.phi_axis = RapidityAxis(-1.0, 1.0, 41);          // step 0.05
    d.values.assign(33 * 41, 0.0);

    const double la1 = 0.5 + 0.3 / 16.0, p1 = -0.5 + 0.013, h1 = 5.0;
    const double la2 = 1.5 - 0.45 / 16.0, p2 = 0.5 - 0.021, h2 = 3.0;
    for (std::size_t ia = 0; ia < 33; ++ia) {
        const double la = std::log(d.scale_axis.value(ia));
        for (std::size_t ip = 0; ip < 41; ++ip) {
            const double p = d.phi_axis.value(ip);
            const double b1 = h1 - 40.0 * (la - la1) * (la - la1) - 30.0 * (p - p1) * (p - p1);
            const double b2 = h2 - 40.0 * (la - la2) * (la - la2) - 30.0 * (p - p2) * (p - p2);
            d.at(ia, ip) = std::max(0.0, b1) + std::max(0.0, b2);
        }
    }

    const double cal = 3.7;
    const std::vector<Peak> peaks = detect_peaks(d, 8, cal);
    REQUIRE(peaks.size() == 2);
    CHECK(peaks[0].height == doctest::Approx(h1).epsilon(1e-12));
    CHECK(std::log(peaks[0].scale) == doctest::Approx(la1).epsilon(1e-10));
    CHECK(peaks[0].rapidity == doctest::Approx(p1).epsilon(1e-10));
    CHECK(peaks[0].omega == doctest::Approx(cal / peaks[0].scale).epsilon(1e-14));
    CHECK(peaks[0].v_over_c == doctest::Approx(std::tanh(peaks[0].rapidity)).epsilon(1e-14));
    CHECK(peaks[1].height == doctest::Approx(h2).epsilon(1e-12));
    CHECK(std::log(peaks[1].scale) == doctest::Approx(la2).epsilon(1e-10));
    CHECK(peaks[1].rapidity == doctest::Approx(p2).epsilon(1e-10));

    // count caps the list after sorting by height
    CHECK(detect_peaks(d, 1, cal).size() == 1);
    CHECK(detect_peaks(d, 1, cal)[0].height == doctest::Approx(h1).epsilon(1e-12));

    CHECK_THROWS_AS(detect_peaks(d, 4, 0.0), std::invalid_argument);
}

TEST_CASE("equal-height peaks are ordered by scale then rapidity") {
    Diagram d;
    d.scale_axis = ScaleAxis(1.0, std::exp(2.0), 33);
    d.phi_axis = RapidityAxis(-1.0, 1.0, 41);
    d.values.assign(33 * 41, 0.0);
    // Two bumps centred exactly on cells, bitwise-equal heights.
    auto put = [&](std::size_t ia, std::size_t ip) {
        d.at(ia, ip) = 2.0;
        d.at(ia - 1, ip) = 1.0;
        d.at(ia + 1, ip) = 1.0;
        d.at(ia, ip - 1) = 1.0;
        d.at(ia, ip + 1) = 1.0;
    };
    put(8, 30);
    put(24, 10);
    const std::vector<Peak> peaks = detect_peaks(d, 8, 1.0);
    REQUIRE(peaks.size() == 2);
    CHECK(peaks[0].height == peaks[1].height);
    CHECK(peaks[0].scale < peaks[1].scale);
    CHECK(peaks[0].cell_a == 8);
    CHECK(peaks[1].cell_a == 24);
}
