#include "apwt/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace apwt {

namespace {

// One cached plan per (rows, cols, direction).  Plans are created with
// FFTW_ESTIMATE (deterministic, no data clobbering) and FFTW_UNALIGNED so the
// thread-safe new-array execute works with any caller buffer.  The FFTW
// planner itself is not thread-safe, hence the mutex.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(std::size_t rows, std::size_t cols, int sign,
                 Complex* in, Complex* out) {
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            const Key key{rows, cols, sign};
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<Complex> dummy_in(rows * cols), dummy_out(rows * cols);
                plan = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols),
                                        reinterpret_cast<fftw_complex*>(dummy_in.data()),
                                        reinterpret_cast<fftw_complex*>(dummy_out.data()),
                                        sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
                if (!plan) throw std::runtime_error("FFTW plan creation failed");
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in),
                         reinterpret_cast<fftw_complex*>(out));
    }

private:
    using Key = std::tuple<std::size_t, std::size_t, int>;
    std::mutex mutex_;
    std::map<Key, fftw_plan> plans_;
};

std::size_t wrap(long m, std::size_t n) {
    const long ln = static_cast<long>(n);
    long r = m % ln;
    if (r < 0) r += ln;
    return static_cast<std::size_t>(r);
}

}  // namespace

Spectrum forward_fourier(const BoundarySignal& signal) {
    if (!all_finite(signal.values))
        throw std::invalid_argument("forward_fourier: signal contains non-finite samples");
    const Grid2D& g = signal.grid;

    std::vector<Complex> buf(signal.values.values());
    std::vector<Complex> fft(g.count());
    PlanCache::instance().execute(g.n_t, g.n_x, FFTW_FORWARD, buf.data(), fft.data());

    // Reorder to centered bins.  The time axis wants the e^{+i} kernel, which
    // equals the forward transform evaluated at the negated frequency index.
    ComplexMatrix out(g.n_t, g.n_x);
    const double measure = g.dt * g.dx;
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const long m = g.freq_index_t(r);
        const double st = g.sigma_t(r);
        const std::size_t src_row = wrap(-m, g.n_t);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const long n = g.freq_index_x(c);
            const double kx = g.k_x(c);
            const Complex phase = std::polar(1.0, st * g.origin_t - kx * g.origin_x);
            out(r, c) = fft[src_row * g.n_x + wrap(n, g.n_x)] * measure * phase;
        }
    }
    return Spectrum(g, std::move(out));
}

BoundarySignal inverse_fourier(const Spectrum& spectrum) {
    const Grid2D& g = spectrum.signal_grid;
    if (spectrum.values.rows() != g.n_t || spectrum.values.cols() != g.n_x)
        throw std::invalid_argument("inverse_fourier: spectrum shape does not match its grid");

    std::vector<Complex> buf(g.count());
    for (std::size_t r = 0; r < g.n_t; ++r) {
        const long m = g.freq_index_t(r);
        const double st = g.sigma_t(r);
        const std::size_t dst_row = wrap(-m, g.n_t);
        for (std::size_t c = 0; c < g.n_x; ++c) {
            const long n = g.freq_index_x(c);
            const double kx = g.k_x(c);
            const Complex phase = std::polar(1.0, -st * g.origin_t + kx * g.origin_x);
            buf[dst_row * g.n_x + wrap(n, g.n_x)] = spectrum.values(r, c) * phase;
        }
    }

    std::vector<Complex> fft(g.count());
    PlanCache::instance().execute(g.n_t, g.n_x, FFTW_BACKWARD, buf.data(), fft.data());

    const double scale =
        1.0 / (static_cast<double>(g.n_t) * static_cast<double>(g.n_x) * g.dt * g.dx);
    ComplexMatrix out(g.n_t, g.n_x, std::move(fft));
    for (Complex& v : out.values()) v *= scale;
    return BoundarySignal(g, std::move(out));
}

ComplexMatrix spatial_synthesis(const Grid2D& window, const ComplexMatrix& spectrum_values) {
    if (spectrum_values.rows() != window.n_t || spectrum_values.cols() != window.n_x)
        throw std::invalid_argument("spatial_synthesis: spectrum shape does not match window");

    std::vector<Complex> buf(window.count());
    for (std::size_t r = 0; r < window.n_t; ++r) {
        const long m = window.freq_index_t(r);
        const double k0 = window.sigma_t(r);
        const std::size_t dst_row = wrap(m, window.n_t);
        for (std::size_t c = 0; c < window.n_x; ++c) {
            const long n = window.freq_index_x(c);
            const double k1 = window.k_x(c);
            const Complex phase = std::polar(1.0, k0 * window.origin_t + k1 * window.origin_x);
            buf[dst_row * window.n_x + wrap(n, window.n_x)] = spectrum_values(r, c) * phase;
        }
    }

    std::vector<Complex> fft(window.count());
    PlanCache::instance().execute(window.n_t, window.n_x, FFTW_BACKWARD, buf.data(), fft.data());

    const double scale = 1.0 / (static_cast<double>(window.n_t) *
                                static_cast<double>(window.n_x) * window.dt * window.dx);
    ComplexMatrix out(window.n_t, window.n_x, std::move(fft));
    for (Complex& v : out.values()) v *= scale;
    return out;
}

}  // namespace apwt
