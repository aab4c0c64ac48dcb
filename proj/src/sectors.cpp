#include "apwt/sectors.hpp"

#include <cmath>
#include <stdexcept>

namespace apwt {

std::optional<Sector> classify(double sigma_t, double k_x) {
    const double at = std::abs(sigma_t);
    const double ax = std::abs(k_x);
    if (at == ax) return std::nullopt;  // light cone, including the origin
    if (at > ax) return sigma_t > 0.0 ? Sector::d1 : Sector::d2;
    return k_x > 0.0 ? Sector::d3 : Sector::d4;
}

Sector sector_from_int(int j) {
    if (j < 1 || j > 4)
        throw std::invalid_argument("sector_from_int: sector index must be 1..4, got " +
                                    std::to_string(j));
    return static_cast<Sector>(j);
}

std::string sector_name(Sector s) {
    switch (s) {
        case Sector::d1: return "D1";
        case Sector::d2: return "D2";
        case Sector::d3: return "D3";
        case Sector::d4: return "D4";
    }
    throw std::logic_error("sector_name: invalid sector");
}

Spectrum sector_mask(const Spectrum& spectrum, Sector s) {
    Spectrum out = spectrum;
    const Grid2D& g = spectrum.signal_grid;
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const double st = g.sigma_t(r);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            if (!in_sector(st, g.k_x(c), s)) out.values(r, c) = Complex(0.0, 0.0);
        }
    }
    return out;
}

std::size_t light_cone_bin_count(const Grid2D& grid) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < grid.n_t; ++r) {
        const double st = grid.sigma_t(r);
        for (std::size_t c = 0; c < grid.n_x; ++c)
            if (!classify(st, grid.k_x(c)).has_value()) ++count;
    }
    return count;
}

}  // namespace apwt
