#pragma once

#include "apwt/grid.hpp"
#include "apwt/types.hpp"

namespace apwt {

/// Discrete realisation of the boundary-plane Fourier transform with the
/// Minkowski pairing (sigma, chi) = -omega*t + k_x*x:
///
///   fhat(sigma) = integral d^2chi f(chi) e^{-i(sigma,chi)}
///               = integral dt dx f e^{+i omega t - i k_x x}
///
/// i.e. the time axis carries the opposite DFT sign from the space axis.
/// Output bins are in centered order (ascending sigma_t rows, ascending k_x
/// columns) and include the dt*dx cell measure and the grid-origin phases, so
/// forward/inverse invert each other to machine precision and the discrete
/// Parseval identity sum|fhat|^2 dsigma dk = (2pi)^2 sum|f|^2 dt dx is exact.
Spectrum forward_fourier(const BoundarySignal& signal);

/// Inverse of forward_fourier:
///   f(chi) = (1/(2pi)^2) integral d^2sigma fhat(sigma) e^{+i(sigma,chi)}.
BoundarySignal inverse_fourier(const Spectrum& spectrum);

/// Plain spatial synthesis used for packet slices on an (x, y) window:
///   u(r) = (1/(2pi)^2) integral d^2k uhat(k) e^{+i k.r}
/// with both axes carrying the +i kernel.  `window` rows sample the first
/// coordinate (y for packet slices), columns the second (x); `spectrum_values`
/// holds uhat on the window's centered dual lattice in the same layout.
ComplexMatrix spatial_synthesis(const Grid2D& window, const ComplexMatrix& spectrum_values);

}  // namespace apwt
