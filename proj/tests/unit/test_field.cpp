#include <cmath>
#include <complex>
#include <doctest.h>
#include <vector>

#include "apwt/field.hpp"
#include "apwt/fourier.hpp"
#include "apwt/sectors.hpp"
#include "apwt/wavelets.hpp"
#include "helpers.hpp"

using namespace apwt;
using apwt_test::random_signal;

namespace {

constexpr double kPi = 3.14159265358979323846;

/// 16 x 16 lattice with dt = dx = pi/8, whose dual steps are exactly 1: bins
/// sit on integer (omega/c, k_x), so kernel values have closed forms.
Grid2D unit_dual_grid() { return Grid2D(16, 16, kPi / 8.0, kPi / 8.0, 0.0, 0.0); }

std::size_t row_for_index(const Grid2D& g, long m) {
    for (std::size_t r = 0; r < g.n_t; ++r)
        if (g.freq_index_t(r) == m) return r;
    REQUIRE(false);
    return 0;
}

std::size_t col_for_index(const Grid2D& g, long n) {
    for (std::size_t c = 0; c < g.n_x; ++c)
        if (g.freq_index_x(c) == n) return c;
    REQUIRE(false);
    return 0;
}

BoundarySignal sector1_packet(const Grid2D& grid, const MotherSpec& spec) {
    ComplexMatrix fhat(grid.n_t, grid.n_x);
    for (std::size_t r = 0; r < grid.n_t; ++r)
        for (std::size_t c = 0; c < grid.n_x; ++c)
            fhat(r, c) = mother_hat(spec, {grid.sigma_t(r), grid.k_x(c)}, 0.0);
    return inverse_fourier(Spectrum(grid, std::move(fhat)));
}

}  // namespace

TEST_CASE("propagating kernel is a pure phase with closed-form value") {
    const Grid2D grid = unit_dual_grid();
    CHECK(grid.dsigma_t() == 1.0);  // exact: 16 * pi/8 is a power-of-two multiple of pi

    ComplexMatrix one(16, 16);
    const std::size_t row = row_for_index(grid, 1);
    const std::size_t col = col_for_index(grid, 0);
    one(row, col) = Complex(1.0, 0.0);
    const Spectrum bin(grid, one);

    // (omega/c, k_x) = (1, 0): k_y = 1, so y = pi flips the sign.
    const Spectrum flipped = propagate(bin, Sector::d1, kPi);
    CHECK(std::abs(flipped.values(row, col) - Complex(-1.0, 0.0)) < 1e-12);

    // y = pi/2 turns it into +i.
    const Spectrum quarter = propagate(bin, Sector::d1, kPi / 2.0);
    CHECK(std::abs(quarter.values(row, col) - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("evanescent kernel decays with closed-form rate") {
    const Grid2D grid = unit_dual_grid();
    ComplexMatrix one(16, 16);
    const std::size_t row = row_for_index(grid, 0);
    const std::size_t col = col_for_index(grid, 2);
    one(row, col) = Complex(1.0, 0.0);
    const Spectrum bin(grid, one);

    // (omega/c, k_x) = (0, 2): s = 2, so y = 1 scales by e^{-2}.
    const Spectrum damped = propagate(bin, Sector::d3, 1.0);
    CHECK(damped.values(row, col).real() ==
          doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(damped.values(row, col).imag() == doctest::Approx(0.0));
    CHECK(std::exp(-2.0) == doctest::Approx(0.1353352832366127));
}

TEST_CASE("propagation masks its sector and rejects negative heights") {
    const Grid2D grid(24, 24, 0.5, 0.5, -6.0, -6.0);
    const Spectrum fhat = forward_fourier(random_signal(grid, 601));

    const Spectrum kept = propagate(fhat, Sector::d2, 0.9);
    for (std::size_t r = 0; r < grid.n_t; ++r)
        for (std::size_t c = 0; c < grid.n_x; ++c)
            if (!in_sector(kept.sigma_t(r), kept.k_x(c), Sector::d2))
                CHECK(kept.values(r, c) == Complex(0.0, 0.0));

    CHECK_THROWS_AS(propagate(fhat, Sector::d1, -0.1), std::domain_error);
    CHECK_THROWS_AS(propagate(fhat, Sector::d3, -1e-9), std::domain_error);
}

TEST_CASE("kernels compose as a semigroup and conserve propagating moduli") {
    const Grid2D grid(24, 24, 0.5, 0.5, -6.0, -6.0);
    const Spectrum fhat = forward_fourier(random_signal(grid, 602));
    for (int j = 1; j <= 4; ++j) {
        const Sector sector = sector_from_int(j);
        const Spectrum masked = sector_mask(fhat, sector);
        const Spectrum stepped = propagate(propagate(masked, sector, 0.4), sector, 1.1);
        const Spectrum direct = propagate(masked, sector, 1.5);
        CHECK(relative_l2_error(stepped.values, direct.values) < 1e-13);

        if (j <= 2) {
            // |e^{i k_y y}| = 1 bin by bin.
            for (std::size_t i = 0; i < masked.values.size(); ++i) {
                const double before = std::abs(masked.values.values()[i]);
                const double after = std::abs(direct.values.values()[i]);
                CHECK(std::abs(after - before) <= 1e-13 * (1.0 + before));
            }
        }
    }
}

TEST_CASE("evanescent energy decays monotonically in height") {
    const Grid2D grid(24, 24, 0.5, 0.5, -6.0, -6.0);
    const BoundarySignal f = random_signal(grid, 603);
    const HalfPlaneField field = solve_halfplane(f, {0.5, 1.0, 1.5});
    REQUIRE(field.slices.size() == 12);

    for (int j : {3, 4}) {
        std::vector<double> norms;
        for (std::size_t h = 0; h < 3; ++h) {
            const FieldSlice& slice = field.slices[h * 4 + static_cast<std::size_t>(j - 1)];
            CHECK(slice.sector == sector_from_int(j));
            CHECK(slice.y == doctest::Approx(0.5 * static_cast<double>(h + 1)));
            norms.push_back(squared_sum(slice.values));
        }
        CHECK(norms[0] > norms[1]);
        CHECK(norms[1] > norms[2]);
        CHECK(norms[0] > 0.0);
    }
}

TEST_CASE("boundary trace is recovered at zero height up to cone bins") {
    const Grid2D grid(32, 32, 0.5, 0.5, -8.0, -8.0);
    const BoundarySignal f = random_signal(grid, 604);
    const Spectrum fhat = forward_fourier(f);

    ComplexMatrix coneless(32, 32);
    for (std::size_t r = 0; r < 32; ++r)
        for (std::size_t c = 0; c < 32; ++c)
            if (classify(fhat.sigma_t(r), fhat.k_x(c)).has_value())
                coneless(r, c) = fhat.values(r, c);
    const BoundarySignal expected = inverse_fourier(Spectrum(grid, std::move(coneless)));

    const HalfPlaneField field = solve_halfplane(f, {0.0});
    const BoundarySignal total(grid, field.totals[0]);
    CHECK(relative_l2_error(total.values, expected.values) < 1e-12);
}

TEST_CASE("light cone content is dropped entirely") {
    const Grid2D grid = unit_dual_grid();
    ComplexMatrix one(16, 16);
    one(row_for_index(grid, 2), col_for_index(grid, 2)) = Complex(0.8, -0.3);
    const BoundarySignal cone_wave = inverse_fourier(Spectrum(grid, std::move(one)));
    const double in_energy = squared_sum(cone_wave.values);

    // Only FFT round-trip dust survives; a leaked cone bin would carry
    // essentially the whole input energy instead.
    const HalfPlaneField field = solve_halfplane(cone_wave, {0.0, 0.7});
    for (const ComplexMatrix& total : field.totals)
        CHECK(squared_sum(total) <= 1e-28 * in_energy);
}

TEST_CASE("wave residual shrinks fourfold per height-step halving") {
    const Grid2D grid(64, 64, 0.5, 0.5, -16.0, -16.0);
    const MotherSpec spec(Sector::d1, 2.0, 2.0, 2.0);
    const BoundarySignal packet = sector1_packet(grid, spec);

    auto residual_at = [&](double dy) {
        const HalfPlaneField field = solve_halfplane(packet, {2.0 - dy, 2.0, 2.0 + dy});
        return wave_residual(BoundarySignal(grid, field.totals[0]),
                             BoundarySignal(grid, field.totals[1]),
                             BoundarySignal(grid, field.totals[2]), dy);
    };
    const double coarse = residual_at(0.06);
    const double fine = residual_at(0.03);
    CHECK(coarse > 0.0);
    CHECK(fine > 0.0);
    CHECK(coarse / fine == doctest::Approx(4.0).epsilon(0.15));

    const BoundarySignal zero(grid, ComplexMatrix(64, 64));
    CHECK(wave_residual(zero, zero, zero, 0.1) == 0.0);
}

TEST_CASE("a boosted packet beam drifts along its ray") {
    const Grid2D grid(64, 64, 0.5, 0.5, -16.0, -16.0);
    const MotherSpec spec(Sector::d1, 4.0, 2.0, 2.0);
    const double phi = 0.3;

    ComplexMatrix fhat(64, 64);
    for (std::size_t r = 0; r < 64; ++r)
        for (std::size_t c = 0; c < 64; ++c)
            fhat(r, c) = family_hat(spec, {0.0, 0.0, 1.0, phi},
                                    {grid.sigma_t(r), grid.k_x(c)}, 0.0);
    const BoundarySignal beam = inverse_fourier(Spectrum(grid, std::move(fhat)));

    const double y = 6.0;
    const HalfPlaneField field = solve_halfplane(beam, {0.0, y});

    auto centroid = [&](const ComplexMatrix& u, double& ct_bar, double& x_bar) {
        double mass = 0.0, mt = 0.0, mx = 0.0;
        for (std::size_t r = 0; r < 64; ++r)
            for (std::size_t c = 0; c < 64; ++c) {
                const double w = std::norm(u(r, c));
                mass += w;
                mt += w * grid.ct(r);
                mx += w * grid.x(c);
            }
        ct_bar = mt / mass;
        x_bar = mx / mass;
    };
    double t0, x0, t1, x1;
    centroid(field.totals[0], t0, x0);
    centroid(field.totals[1], t1, x1);

    // Spectrum concentrated at hyperbolic angle phi: group delays
    // d(ct)/dy = omega / (c k_y) = cosh(phi), dx/dy = k_x / k_y = sinh(phi).
    CHECK(x1 - x0 == doctest::Approx(y * std::sinh(phi)).epsilon(0.1));
    CHECK(t1 - t0 == doctest::Approx(y * std::cosh(phi)).epsilon(0.1));
}
