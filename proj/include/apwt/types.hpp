#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace apwt {

using Complex = std::complex<double>;

/// Two-vector on the (ct, x) plane or its Fourier dual (omega/c, k_x).
/// Component 0 is the time-like entry, component 1 the space-like one.
struct Vec2 {
    double t = 0.0;
    double x = 0.0;
};

/// Dense row-major complex matrix.  Rows index the first (time-like) axis,
/// columns the second (space-like) axis of whatever grid it belongs to.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw std::invalid_argument("ComplexMatrix: data size does not match rows*cols");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }
    std::vector<Complex>& values() { return data_; }
    const std::vector<Complex>& values() const { return data_; }

    bool same_shape(const ComplexMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/// Sum of |m|^2 over all entries (no cell-measure weight).
double squared_sum(const ComplexMatrix& m);

/// true when every entry is finite in both components.
bool all_finite(const ComplexMatrix& m);

/// Relative L2 distance ||a-b|| / ||b||; returns 0 when both are zero.
double relative_l2_error(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace apwt
