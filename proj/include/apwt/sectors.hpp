#pragma once

#include <optional>
#include <string>

#include "apwt/grid.hpp"
#include "apwt/types.hpp"

namespace apwt {

/// The four open light-cone sectors of the (omega/c, k_x) plane.
///   D1: omega > 0, |k_x| < omega/c   (forward propagating)
///   D2: omega < 0, |k_x| < |omega|/c (backward propagating)
///   D3: k_x > 0, |omega|/c < k_x     (right evanescent)
///   D4: k_x < 0, |omega|/c < |k_x|   (left evanescent)
/// Points with |omega|/c == |k_x| lie on the light cone and belong to none.
enum class Sector : int { d1 = 1, d2 = 2, d3 = 3, d4 = 4 };

/// Sector of a spectral point, or nullopt on the light cone (including the
/// origin).  Uses exact comparisons of the given coordinates.
std::optional<Sector> classify(double sigma_t, double k_x);

inline bool in_sector(double sigma_t, double k_x, Sector s) {
    auto c = classify(sigma_t, k_x);
    return c.has_value() && *c == s;
}

Sector sector_from_int(int j);
std::string sector_name(Sector s);

/// Zeroes every bin outside the open sector `s`; light-cone bins are zeroed
/// for all four sectors.  The four masks partition the off-cone bins.
Spectrum sector_mask(const Spectrum& spectrum, Sector s);

/// Number of grid bins lying exactly on the light cone.
std::size_t light_cone_bin_count(const Grid2D& grid);

}  // namespace apwt
