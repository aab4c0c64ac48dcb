#pragma once

/// APWF/1 binary container plus the plot-ready CSV/PGM writers.
///
/// An APWF/1 file is an ASCII header whose total length is a multiple of 64
/// bytes, followed by row-major little-endian complex float64 payload.  The
/// header starts with the magic and its own byte length ("APWF/1 h=128 ...")
/// and then holds space-separated key=value fields; real numbers are printed
/// as C hexfloats so they round-trip exactly.  Keys:
///
///     s=      axis semantics tag: TX boundary signal, WK spectrum,
///             FS field slice, CG coefficient grid, DG diagram
///     n=      lattice shape n_t,n_x
///     d= o=   lattice steps and origins (hexfloat pairs)
///     y=      slice height (FS)
///     sec=    FS sector: 1..4, or 0 for the summed total field
///     pa=     rapidity axis as count:min:max (CG, DG)
///     sa=     scale axis as count:min:max (CG, DG; log-uniform samples)
///     mother= sector,kappa,sigma_par,sigma_perp (CG)
///
/// Payloads: TX/WK/FS store n_t*n_x values; CG stores the 4D coefficient
/// array ordered (phi, a, t, x); DG stores scale-major (a, phi) diagram
/// values as complex pairs with zero imaginary part.

#include <filesystem>
#include <string>
#include <vector>

#include "apwt/field.hpp"
#include "apwt/grid.hpp"
#include "apwt/transform.hpp"

namespace apwt {

void write_signal(const std::filesystem::path& path, const BoundarySignal& signal);
BoundarySignal read_signal(const std::filesystem::path& path);

void write_spectrum(const std::filesystem::path& path, const Spectrum& spectrum);
Spectrum read_spectrum(const std::filesystem::path& path);

struct FieldSliceFile {
    Grid2D grid{2, 2, 1.0, 1.0, 0.0, 0.0};
    double y = 0.0;
    int sector_tag = 0;  ///< 1..4 = sector slice, 0 = summed total
    ComplexMatrix values;
};
void write_field_slice(const std::filesystem::path& path, const Grid2D& grid, double y,
                       int sector_tag, const ComplexMatrix& values);
FieldSliceFile read_field_slice(const std::filesystem::path& path);

void write_coefficient_grid(const std::filesystem::path& path, const CoefficientGrid& grid);
CoefficientGrid read_coefficient_grid(const std::filesystem::path& path);

void write_diagram(const std::filesystem::path& path, const Diagram& diagram);
Diagram read_diagram(const std::filesystem::path& path);

/// The s= tag of an APWF/1 file, without loading the payload.
std::string apwf_kind(const std::filesystem::path& path);

/// Long-format CSV with header "a,phi,S".
void write_diagram_csv(const std::filesystem::path& path, const Diagram& diagram);
/// CSV with header "a,phi,omega,v_over_c,height".
void write_peaks_csv(const std::filesystem::path& path, const std::vector<Peak>& peaks);

/// 16-bit binary PGM heatmap (rows = ascending scale, columns = ascending
/// rapidity).  Returns the linear min-max mapping so callers can record it.
struct PgmScaling {
    double min = 0.0;
    double max = 0.0;
};
PgmScaling write_diagram_pgm(const std::filesystem::path& path, const Diagram& diagram);

}  // namespace apwt
