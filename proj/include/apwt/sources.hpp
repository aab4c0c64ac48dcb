#pragma once

/// Synthetic boundary data: monochromatic sources moving below the boundary.
///
/// Each source travels at constant velocity v along a line at depth y < 0 and
/// radiates a fixed-frequency tone.  In the source's rest frame the signal at
/// the boundary point (ct, x) is the outgoing cylindrical wave
///
///     u(ct, x) = sqrt(2c / (pi omega r')) * exp(i(omega/c) r' - i omega t' - i pi/4)
///
/// with (ct', x') the boost by the source rapidity of (ct, x - x_s) and
/// r' = sqrt(x'^2 + depth^2).  The amplitude is the far-field (large r')
/// cylindrical asymptote, so configurations that place sources closer than
/// about 20 wavelengths to the boundary are rejected.

#include <cstdint>
#include <optional>
#include <vector>

#include "apwt/grid.hpp"
#include "apwt/types.hpp"

namespace apwt {

/// A group of sources sharing one tone frequency and one nominal speed.
struct SourceGroup {
    double omega = 1.0;        ///< angular frequency of the emitted tone
    double phi_mean = 0.0;     ///< rapidity of the nominal group speed
    double speed_sigma = 0.0;  ///< std dev of per-source speed jitter, in units of c
    std::size_t n_sources = 1;
    double depth = -5000.0;    ///< y-coordinate of the source line (must be < 0)
    /// Per-source crossing points x_s.  Empty selects an even spread over
    /// [-500, 500]; otherwise the size must equal n_sources.
    std::vector<double> x_offsets;
    /// When set, this group's speeds come from a private random stream seeded
    /// here instead of continuing the experiment-wide stream.
    std::optional<std::uint64_t> seed;
};

struct ExperimentConfig {
    Grid2D grid{2, 2, 1.0, 1.0, 0.0, 0.0};
    std::vector<SourceGroup> groups;
    std::uint64_t seed = 1;
    double c = 1.0;
};

/// Boundary trace of a single source crossing x = x_s at t = 0 with rapidity
/// phi.  Throws std::invalid_argument when depth >= 0 or when the far-field
/// amplitude is invalid (omega * |depth| / c < 20).
ComplexMatrix single_source_trace(const Grid2D& grid, double omega, double phi, double x_s,
                                  double depth, double c = 1.0);

struct ExperimentResult {
    BoundarySignal boundary;
    /// v/c actually used, source by source in configuration order.
    std::vector<double> speeds;
    /// Draws discarded because the jittered speed reached or exceeded c.
    std::size_t speed_redraws = 0;
};

/// Superposes every source of every group on the configured lattice.  Speeds
/// are drawn sequentially (group by group, source by source) from a
/// Mersenne-Twister stream seeded with config.seed, so results are
/// reproducible bit for bit across platforms and thread counts.
ExperimentResult experiment_field(const ExperimentConfig& config);

}  // namespace apwt
