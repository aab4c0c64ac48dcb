// Python bindings for the main half-plane wavelet operations.  Complex fields
// cross the boundary as 2D numpy arrays paired with an explicit Grid; the
// heavyweight state (FFT plans, thread pools) stays inside the C++ core.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <cstring>
#include <stdexcept>
#include <vector>

#include "apwt/config.hpp"
#include "apwt/field.hpp"
#include "apwt/fourier.hpp"
#include "apwt/io.hpp"
#include "apwt/manifest.hpp"
#include "apwt/parallel.hpp"
#include "apwt/sectors.hpp"
#include "apwt/sources.hpp"
#include "apwt/transform.hpp"
#include "apwt/wavelets.hpp"

namespace py = pybind11;
using namespace apwt;

namespace {

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const Grid2D& grid, const ComplexArray& array) {
    const py::buffer_info info = array.request();
    if (info.ndim != 2)
        throw std::invalid_argument("expected a 2D complex array");
    if (static_cast<std::size_t>(info.shape[0]) != grid.n_t ||
        static_cast<std::size_t>(info.shape[1]) != grid.n_x)
        throw std::invalid_argument("array shape does not match the grid (n_t, n_x)");
    ComplexMatrix m(grid.n_t, grid.n_x);
    std::memcpy(m.data(), info.ptr, grid.count() * sizeof(Complex));
    return m;
}

py::array_t<Complex> from_matrix(const ComplexMatrix& m) {
    py::array_t<Complex> array({m.rows(), m.cols()});
    std::memcpy(array.mutable_data(), m.data(), m.size() * sizeof(Complex));
    return array;
}

// The (ssize_t count, ptr) array_t constructor mis-resolves a braced {n}
// shape, so spell out shape and strides to land on the container overload.
template <typename F>
py::array_t<double> axis_array(std::size_t n, F&& value) {
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = value(i);
    return py::array_t<double>({static_cast<py::ssize_t>(n)},
                               {static_cast<py::ssize_t>(sizeof(double))}, v.data());
}

MuSampling sampling_from_args(const Spectrum& fhat, const MotherSpec& spec, double a_min,
                              double a_max, std::size_t a_samples, double phi_min,
                              double phi_max, std::size_t phi_samples) {
    if (a_samples == 0 && phi_samples == 0)
        return MuSampling::production(dominant_scale(fhat, spec));
    MuSampling sampling = MuSampling::production(
        a_samples == 0 ? dominant_scale(fhat, spec) : 1.0);
    if (a_samples != 0) sampling.scale = ScaleAxis(a_min, a_max, a_samples);
    if (phi_samples != 0) sampling.phi = RapidityAxis(phi_min, phi_max, phi_samples);
    return sampling;
}

}  // namespace

PYBIND11_MODULE(_apwt, m) {
    m.doc() = "affine Poincare wavelet analysis of 2+1D wave boundary data";
    m.attr("__version__") = kVersion;

    py::class_<Grid2D>(m, "Grid")
        .def(py::init<std::size_t, std::size_t, double, double, double, double>(),
             py::arg("n_t"), py::arg("n_x"), py::arg("dt"), py::arg("dx"),
             py::arg("origin_t") = 0.0, py::arg("origin_x") = 0.0)
        .def_readonly("n_t", &Grid2D::n_t)
        .def_readonly("n_x", &Grid2D::n_x)
        .def_readonly("dt", &Grid2D::dt)
        .def_readonly("dx", &Grid2D::dx)
        .def_readonly("origin_t", &Grid2D::origin_t)
        .def_readonly("origin_x", &Grid2D::origin_x)
        .def("dsigma_t", &Grid2D::dsigma_t)
        .def("dk_x", &Grid2D::dk_x)
        .def("sigma_t",
             [](const Grid2D& g) {
                 return axis_array(g.n_t, [&](std::size_t r) { return g.sigma_t(r); });
             })
        .def("k_x",
             [](const Grid2D& g) {
                 return axis_array(g.n_x, [&](std::size_t c) { return g.k_x(c); });
             })
        .def("__eq__", [](const Grid2D& a, const Grid2D& b) { return a == b; })
        .def("__repr__", [](const Grid2D& g) {
            return "Grid(n_t=" + std::to_string(g.n_t) + ", n_x=" + std::to_string(g.n_x) +
                   ", dt=" + std::to_string(g.dt) + ", dx=" + std::to_string(g.dx) + ")";
        });

    py::class_<MotherSpec>(m, "MotherSpec")
        .def(py::init([](int sector, double kappa, double sigma_par, double sigma_perp) {
                 return MotherSpec(sector_from_int(sector), kappa, sigma_par, sigma_perp);
             }),
             py::arg("sector"), py::arg("kappa"), py::arg("sigma_par"), py::arg("sigma_perp"))
        .def_property_readonly(
            "sector", [](const MotherSpec& s) { return static_cast<int>(s.sector); })
        .def_readonly("kappa", &MotherSpec::kappa)
        .def_readonly("sigma_par", &MotherSpec::sigma_par)
        .def_readonly("sigma_perp", &MotherSpec::sigma_perp)
        .def("localization_p", &MotherSpec::localization_p)
        .def("well_localized", &MotherSpec::well_localized);

    m.def("set_max_threads", &set_max_threads, py::arg("n"),
          "Worker-thread cap for the C++ core (0 = hardware default).");

    m.def(
        "forward_fourier",
        [](const Grid2D& grid, const ComplexArray& values) {
            return from_matrix(forward_fourier(BoundarySignal(grid, to_matrix(grid, values)))
                                   .values);
        },
        py::arg("grid"), py::arg("values"),
        "Boundary-plane Fourier transform with the (-omega t + k_x x) pairing; "
        "rows/columns come back in centered (sigma_t, k_x) order.");

    m.def(
        "inverse_fourier",
        [](const Grid2D& grid, const ComplexArray& spectrum) {
            return from_matrix(inverse_fourier(Spectrum(grid, to_matrix(grid, spectrum)))
                                   .values);
        },
        py::arg("grid"), py::arg("spectrum"));

    m.def(
        "sector_mask",
        [](const Grid2D& grid, const ComplexArray& spectrum, int sector) {
            return from_matrix(
                sector_mask(Spectrum(grid, to_matrix(grid, spectrum)), sector_from_int(sector))
                    .values);
        },
        py::arg("grid"), py::arg("spectrum"), py::arg("sector"),
        "Zeroes every bin outside the open sector (1..4); cone bins never survive.");

    m.def(
        "mother_hat",
        [](const MotherSpec& spec, double sigma_t, double k_x, double y) {
            return mother_hat(spec, {sigma_t, k_x}, y);
        },
        py::arg("spec"), py::arg("sigma_t"), py::arg("k_x"), py::arg("y") = 0.0);

    m.def(
        "family_hat",
        [](const MotherSpec& spec, double shift_ct, double shift_x, double scale,
           double rapidity, double sigma_t, double k_x, double y) {
            return family_hat(spec, {shift_ct, shift_x, scale, rapidity}, {sigma_t, k_x}, y);
        },
        py::arg("spec"), py::arg("shift_ct"), py::arg("shift_x"), py::arg("scale"),
        py::arg("rapidity"), py::arg("sigma_t"), py::arg("k_x"), py::arg("y") = 0.0);

    m.def(
        "admissibility_constant",
        [](const MotherSpec& spec) { return admissibility_constant(spec).value; },
        py::arg("spec"));

    m.def(
        "apwt_slab",
        [](const Grid2D& grid, const ComplexArray& values, const MotherSpec& spec,
           double scale, double rapidity) {
            const Spectrum fhat =
                forward_fourier(BoundarySignal(grid, to_matrix(grid, values)));
            return from_matrix(apwt_slab(fhat, spec, scale, rapidity));
        },
        py::arg("grid"), py::arg("values"), py::arg("spec"), py::arg("scale"),
        py::arg("rapidity"),
        "All transform coefficients F(b; a, phi) for one (scale, rapidity), "
        "sampled over the signal lattice of shifts b.");

    m.def(
        "scale_rapidity_diagram",
        [](const Grid2D& grid, const ComplexArray& values, const MotherSpec& spec,
           double a_min, double a_max, std::size_t a_samples, double phi_min, double phi_max,
           std::size_t phi_samples) {
            const BoundarySignal f(grid, to_matrix(grid, values));
            const MuSampling sampling =
                sampling_from_args(forward_fourier(f), spec, a_min, a_max, a_samples, phi_min,
                                   phi_max, phi_samples);
            const Diagram diagram = scale_rapidity_diagram(f, spec, sampling, {});

            py::array_t<double> s({diagram.scale_axis.count, diagram.phi_axis.count});
            for (std::size_t ia = 0; ia < diagram.scale_axis.count; ++ia)
                for (std::size_t ip = 0; ip < diagram.phi_axis.count; ++ip)
                    s.mutable_at(ia, ip) = diagram.at(ia, ip);
            const py::array_t<double> a_axis = axis_array(
                diagram.scale_axis.count,
                [&](std::size_t ia) { return diagram.scale_axis.value(ia); });
            const py::array_t<double> phi_axis = axis_array(
                diagram.phi_axis.count,
                [&](std::size_t ip) { return diagram.phi_axis.value(ip); });
            return py::make_tuple(s, a_axis, phi_axis);
        },
        py::arg("grid"), py::arg("values"), py::arg("spec"), py::arg("a_min") = 0.0,
        py::arg("a_max") = 0.0, py::arg("a_samples") = 0, py::arg("phi_min") = 0.0,
        py::arg("phi_max") = 0.0, py::arg("phi_samples") = 0,
        "Energy density S(a, phi) plus its two axes.  With no axis arguments "
        "the sampling defaults to the production window centred on the "
        "sector's dominant scale.");

    m.def(
        "detect_peaks",
        [](const py::array_t<double, py::array::c_style | py::array::forcecast>& s,
           double a_min, double a_max, double phi_min, double phi_max, std::size_t count,
           double freq_calibration) {
            const py::buffer_info info = s.request();
            if (info.ndim != 2) throw std::invalid_argument("S must be 2D (scale, rapidity)");
            Diagram diagram;
            diagram.scale_axis =
                ScaleAxis(a_min, a_max, static_cast<std::size_t>(info.shape[0]));
            diagram.phi_axis =
                RapidityAxis(phi_min, phi_max, static_cast<std::size_t>(info.shape[1]));
            const double* data = static_cast<const double*>(info.ptr);
            diagram.values.assign(data, data + info.shape[0] * info.shape[1]);

            const std::vector<Peak> peaks = detect_peaks(diagram, count, freq_calibration);
            py::array_t<double> out({peaks.size(), std::size_t(5)});
            for (std::size_t i = 0; i < peaks.size(); ++i) {
                out.mutable_at(i, 0) = peaks[i].scale;
                out.mutable_at(i, 1) = peaks[i].rapidity;
                out.mutable_at(i, 2) = peaks[i].omega;
                out.mutable_at(i, 3) = peaks[i].v_over_c;
                out.mutable_at(i, 4) = peaks[i].height;
            }
            return out;
        },
        py::arg("S"), py::arg("a_min"), py::arg("a_max"), py::arg("phi_min"),
        py::arg("phi_max"), py::arg("count") = 16, py::arg("freq_calibration") = 1.0,
        "Refined interior maxima of a diagram array; rows are "
        "(a, phi, omega, v_over_c, height) sorted by height.");

    m.def(
        "solve_halfplane",
        [](const Grid2D& grid, const ComplexArray& values, const std::vector<double>& heights) {
            const HalfPlaneField field =
                solve_halfplane(BoundarySignal(grid, to_matrix(grid, values)), heights);
            py::array_t<Complex> out({heights.size(), grid.n_t, grid.n_x});
            for (std::size_t h = 0; h < heights.size(); ++h)
                std::memcpy(out.mutable_data(h, 0, 0), field.totals[h].data(),
                            grid.count() * sizeof(Complex));
            return out;
        },
        py::arg("grid"), py::arg("values"), py::arg("heights"),
        "Total field u(ct, x; y) on a stack of heights, shape "
        "(len(heights), n_t, n_x).");

    m.def(
        "experiment_field",
        [](const std::string& config_json) {
            const ExperimentConfig config = parse_experiment_config(config_json);
            const ExperimentResult result = experiment_field(config);
            py::dict out;
            out["grid"] = config.grid;
            out["values"] = from_matrix(result.boundary.values);
            out["speeds"] = result.speeds;
            out["speed_redraws"] = result.speed_redraws;
            return out;
        },
        py::arg("config_json"),
        "Synthesises the moving-source boundary data described by a JSON "
        "experiment configuration (same schema as the CLI's --config).");

    m.def(
        "read_signal",
        [](const std::filesystem::path& path) {
            const BoundarySignal f = read_signal(path);
            return py::make_tuple(f.grid, from_matrix(f.values));
        },
        py::arg("path"), "Loads an APWF/1 boundary signal as (Grid, values).");

    m.def(
        "write_signal",
        [](const std::filesystem::path& path, const Grid2D& grid, const ComplexArray& values) {
            write_signal(path, BoundarySignal(grid, to_matrix(grid, values)));
        },
        py::arg("path"), py::arg("grid"), py::arg("values"));

    m.def("apwf_kind", &apwf_kind, py::arg("path"),
          "The s= tag of an APWF/1 file: TX, WK, FS, CG or DG.");
}
