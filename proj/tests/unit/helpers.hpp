#pragma once

#include <cstdint>
#include <random>

#include "apwt/grid.hpp"
#include "apwt/types.hpp"

namespace apwt_test {

// Platform-stable uniforms straight from the engine's high bits; the
// std::uniform_real_distribution wording leaves the exact stream unspecified.
inline double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

inline double uniform_in(std::mt19937_64& engine, double lo, double hi) {
    return lo + (hi - lo) * uniform01(engine);
}

inline apwt::ComplexMatrix random_values(std::size_t rows, std::size_t cols,
                                         std::uint64_t seed) {
    std::mt19937_64 engine(seed);
    apwt::ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = apwt::Complex(uniform_in(engine, -1.0, 1.0),
                                    uniform_in(engine, -1.0, 1.0));
    return m;
}

inline apwt::BoundarySignal random_signal(const apwt::Grid2D& grid, std::uint64_t seed) {
    return apwt::BoundarySignal(grid, random_values(grid.n_t, grid.n_x, seed));
}

}  // namespace apwt_test
