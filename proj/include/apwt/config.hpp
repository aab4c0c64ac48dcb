#pragma once

/// JSON configuration parsing with field-level error messages.
///
/// Experiment config layout (time axis measured in ct units):
///
///     {
///       "grid": {"n_t": 513, "n_x": 513, "dt": 0.5, "dx": 0.5,
///                "origin_t": -128.0, "origin_x": -128.0},
///       "c": 1.0,
///       "seed": 1,
///       "groups": [
///         {"omega": 1.0, "phi_mean": 0.4, "speed_sigma": 0.01,
///          "n_sources": 32, "depth": -5000.0},
///         ...
///       ]
///     }
///
/// Optional per-group keys: "x_offsets" (array, length n_sources; default is
/// an even spread over [-500, 500]) and "seed" (gives the group its own
/// random stream instead of continuing the global one).
///
/// Mother wavelet config:
///
///     {"sector": 1, "kappa": 4.0, "sigma_par": 14.832396974191326,
///      "sigma_perp": 8.0}

#include <filesystem>
#include <string>

#include "apwt/sources.hpp"
#include "apwt/wavelets.hpp"

namespace apwt {

/// Throws std::invalid_argument naming the offending field on any violation.
ExperimentConfig parse_experiment_config(const std::string& json_text);
MotherSpec parse_mother_spec(const std::string& json_text);

/// Reads a whole file; throws std::runtime_error when unreadable.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace apwt
