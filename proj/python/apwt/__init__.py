"""Affine Poincare wavelet analysis of 2+1D wave boundary data.

Thin Python veneer over the C++ core: complex boundary fields travel as 2D
numpy arrays paired with a Grid, and every operation delegates to the same
code paths the command-line tool uses.
"""

from ._apwt import (
    Grid,
    MotherSpec,
    __version__,
    admissibility_constant,
    apwf_kind,
    apwt_slab,
    detect_peaks,
    experiment_field,
    family_hat,
    forward_fourier,
    inverse_fourier,
    mother_hat,
    read_signal,
    scale_rapidity_diagram,
    sector_mask,
    set_max_threads,
    solve_halfplane,
    write_signal,
)

__all__ = [
    "Grid",
    "MotherSpec",
    "__version__",
    "admissibility_constant",
    "apwf_kind",
    "apwt_slab",
    "detect_peaks",
    "experiment_field",
    "family_hat",
    "forward_fourier",
    "inverse_fourier",
    "mother_hat",
    "read_signal",
    "scale_rapidity_diagram",
    "sector_mask",
    "set_max_threads",
    "solve_halfplane",
    "write_signal",
]
