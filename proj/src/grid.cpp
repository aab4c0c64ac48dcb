#include "apwt/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace apwt {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

long centered_min(std::size_t n) {
    // Centered integer frequencies cover [-(n/2), ..., n - 1 - n/2]:
    // even n -> [-n/2, n/2 - 1], odd n -> symmetric [-(n-1)/2, (n-1)/2].
    return -static_cast<long>(n / 2);
}
}  // namespace

Grid2D::Grid2D(std::size_t n_t_, std::size_t n_x_, double dt_, double dx_,
               double origin_t_, double origin_x_)
    : n_t(n_t_), n_x(n_x_), dt(dt_), dx(dx_), origin_t(origin_t_), origin_x(origin_x_) {
    if (n_t < 2 || n_x < 2)
        throw std::invalid_argument("Grid2D: need at least 2 samples per axis");
    if (!(dt > 0.0) || !(dx > 0.0))
        throw std::invalid_argument("Grid2D: steps must be positive");
    if (!std::isfinite(dt) || !std::isfinite(dx) ||
        !std::isfinite(origin_t) || !std::isfinite(origin_x))
        throw std::invalid_argument("Grid2D: parameters must be finite");
}

double Grid2D::dsigma_t() const { return kTwoPi / (static_cast<double>(n_t) * dt); }
double Grid2D::dk_x() const { return kTwoPi / (static_cast<double>(n_x) * dx); }

long Grid2D::freq_index_t(std::size_t row) const {
    return centered_min(n_t) + static_cast<long>(row);
}
long Grid2D::freq_index_x(std::size_t col) const {
    return centered_min(n_x) + static_cast<long>(col);
}

double Grid2D::sigma_t(std::size_t row) const {
    return static_cast<double>(freq_index_t(row)) * dsigma_t();
}
double Grid2D::k_x(std::size_t col) const {
    return static_cast<double>(freq_index_x(col)) * dk_x();
}

Grid2D Grid2D::dual() const {
    return Grid2D(n_t, n_x, dsigma_t(), dk_x(),
                  static_cast<double>(centered_min(n_t)) * dsigma_t(),
                  static_cast<double>(centered_min(n_x)) * dk_x());
}

BoundarySignal::BoundarySignal(Grid2D g, ComplexMatrix v) : grid(g), values(std::move(v)) {
    if (values.rows() != grid.n_t || values.cols() != grid.n_x)
        throw std::invalid_argument("BoundarySignal: value shape does not match grid");
}

double BoundarySignal::norm_squared() const {
    return squared_sum(values) * grid.dt * grid.dx;
}

Spectrum::Spectrum(Grid2D g, ComplexMatrix v) : signal_grid(g), values(std::move(v)) {
    if (values.rows() != signal_grid.n_t || values.cols() != signal_grid.n_x)
        throw std::invalid_argument("Spectrum: value shape does not match grid");
}

double Spectrum::norm_squared() const {
    const double measure = signal_grid.dsigma_t() * signal_grid.dk_x();
    return squared_sum(values) * measure / (kTwoPi * kTwoPi);
}

}  // namespace apwt
