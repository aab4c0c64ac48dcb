#include <cstdint>
#include <cstring>
#include <doctest.h>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

#include "apwt/io.hpp"
#include "apwt/transform.hpp"
#include "apwt/wavelets.hpp"
#include "helpers.hpp"

using namespace apwt;
namespace fs = std::filesystem;

namespace {

fs::path test_dir() {
    const fs::path dir = fs::temp_directory_path() / "apwt_io_tests";
    fs::create_directories(dir);
    return dir;
}

std::vector<char> slurp(const fs::path& path) {
    std::ifstream stream(path, std::ios::binary);
    REQUIRE(stream.good());
    return std::vector<char>(std::istreambuf_iterator<char>(stream),
                             std::istreambuf_iterator<char>());
}

std::vector<std::string> read_lines(const fs::path& path) {
    std::ifstream stream(path);
    REQUIRE(stream.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(stream, line)) lines.push_back(line);
    return lines;
}

bool bitwise_equal(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

/// Header length declared by the file itself ("APWF/1 h=<N> ...").
std::size_t declared_header_length(const std::vector<char>& bytes) {
    const std::string head(bytes.begin(), bytes.begin() + 32);
    REQUIRE(head.rfind("APWF/1 h=", 0) == 0);
    return std::stoul(head.substr(9));
}

Diagram ramp_diagram() {
    Diagram d;
    d.scale_axis = ScaleAxis(0.5, 2.0, 2);
    d.phi_axis = RapidityAxis(-1.0, 1.0, 3);
    d.values = {0.0, 1.0, 2.0, 3.0, 4.0, 5.0};
    return d;
}

}  // namespace

TEST_CASE("boundary signals round-trip bitwise through APWF files") {
    const Grid2D grid(7, 9, 0.37, 0.21, -3.33, -1.07);
    const BoundarySignal signal = apwt_test::random_signal(grid, 801);
    const fs::path path = test_dir() / "signal.apwf";

    write_signal(path, signal);
    const BoundarySignal back = read_signal(path);
    CHECK(back.grid == grid);
    CHECK(bitwise_equal(back.values.values(), signal.values.values()));
    CHECK(apwf_kind(path) == "TX");

    const std::vector<char> bytes = slurp(path);
    const std::size_t h = declared_header_length(bytes);
    CHECK(h % 64 == 0);
    CHECK(h >= 64);
    CHECK(bytes.size() == h + grid.count() * sizeof(Complex));
    // the header is printable ASCII ending in a newline
    CHECK(bytes[h - 1] == '\n');
    for (std::size_t i = 0; i < h; ++i) {
        const auto ch = static_cast<unsigned char>(bytes[i]);
        CHECK((ch == '\n' || (ch >= 0x20 && ch < 0x7f)));
    }
}

TEST_CASE("spectra round-trip with their originating lattice") {
    const Grid2D grid(6, 5, 0.5, 0.8, -1.5, -2.0);
    const Spectrum spectrum(grid, apwt_test::random_values(6, 5, 802));
    const fs::path path = test_dir() / "spectrum.apwf";

    write_spectrum(path, spectrum);
    const Spectrum back = read_spectrum(path);
    CHECK(back.signal_grid == grid);
    CHECK(bitwise_equal(back.values.values(), spectrum.values.values()));
    CHECK(apwf_kind(path) == "WK");
}

TEST_CASE("field slices keep their height and sector tag") {
    const Grid2D grid(5, 6, 0.4, 0.3, -1.0, -0.9);
    const ComplexMatrix values = apwt_test::random_values(5, 6, 803);
    const fs::path path = test_dir() / "slice.apwf";

    for (int tag : {0, 1, 2, 3, 4}) {
        write_field_slice(path, grid, 2.75, tag, values);
        const FieldSliceFile back = read_field_slice(path);
        CHECK(back.grid == grid);
        CHECK(back.y == 2.75);
        CHECK(back.sector_tag == tag);
        CHECK(bitwise_equal(back.values.values(), values.values()));
    }
    CHECK(apwf_kind(path) == "FS");

    CHECK_THROWS_AS(write_field_slice(path, grid, 1.0, 5, values), std::invalid_argument);
    CHECK_THROWS_AS(write_field_slice(path, grid, 1.0, -1, values), std::invalid_argument);
    CHECK_THROWS_AS(write_field_slice(path, Grid2D(4, 6, 0.4, 0.3), 1.0, 0, values),
                    std::invalid_argument);
}

TEST_CASE("coefficient grids carry mother and axes exactly") {
    CoefficientGrid grid;
    grid.mother = MotherSpec(Sector::d2, 1.25, 2.5, 0.75);
    grid.b_grid = Grid2D(4, 5, 0.5, 0.25, -1.0, -0.5);
    grid.phi_axis = RapidityAxis(-1.2, 0.7, 5);
    grid.scale_axis = ScaleAxis(0.3, 2.7, 4);
    grid.values = apwt_test::random_values(20, 20, 804).values();
    REQUIRE(grid.values.size() == grid.phi_axis.count * grid.scale_axis.count *
                                      grid.b_grid.count());

    const fs::path path = test_dir() / "coefficients.apwf";
    write_coefficient_grid(path, grid);
    const CoefficientGrid back = read_coefficient_grid(path);
    CHECK(back.b_grid == grid.b_grid);
    CHECK(back.mother.sector == Sector::d2);
    CHECK(back.mother.kappa == 1.25);
    CHECK(back.mother.sigma_par == 2.5);
    CHECK(back.mother.sigma_perp == 0.75);
    CHECK(back.phi_axis.count == 5);
    CHECK(back.phi_axis.phi_min == -1.2);
    CHECK(back.phi_axis.phi_max == 0.7);
    CHECK(back.scale_axis.count == 4);
    CHECK(back.scale_axis.a_min == 0.3);
    CHECK(back.scale_axis.a_max == 2.7);
    CHECK(bitwise_equal(back.values, grid.values));
    CHECK(apwf_kind(path) == "CG");
}

TEST_CASE("diagrams round-trip through real-as-complex payloads") {
    const Diagram diagram = ramp_diagram();
    const fs::path path = test_dir() / "diagram.apwf";
    write_diagram(path, diagram);

    const Diagram back = read_diagram(path);
    CHECK(back.scale_axis.a_min == 0.5);
    CHECK(back.scale_axis.a_max == 2.0);
    CHECK(back.scale_axis.count == 2);
    CHECK(back.phi_axis.count == 3);
    CHECK(back.values == diagram.values);
    CHECK(apwf_kind(path) == "DG");

    // Imaginary halves of the stored pairs are exactly zero.
    const std::vector<char> bytes = slurp(path);
    const std::size_t h = declared_header_length(bytes);
    REQUIRE(bytes.size() == h + 6 * sizeof(Complex));
    for (std::size_t i = 0; i < 6; ++i) {
        double imag = 0.0;
        std::memcpy(&imag, bytes.data() + h + i * sizeof(Complex) + sizeof(double),
                    sizeof(double));
        CHECK(imag == 0.0);
    }
}

TEST_CASE("mismatched kinds and broken files are reported") {
    const fs::path dg_path = test_dir() / "kind_probe.apwf";
    write_diagram(dg_path, ramp_diagram());
    try {
        (void)read_signal(dg_path);
        FAIL("read_signal accepted a diagram file");
    } catch (const std::runtime_error& error) {
        CHECK(std::string(error.what()).find("holds 'DG' data, expected 'TX'") !=
              std::string::npos);
    }

    CHECK_THROWS_AS((void)read_signal(test_dir() / "absent.apwf"), std::runtime_error);
    CHECK_THROWS_AS((void)apwf_kind(test_dir() / "absent.apwf"), std::runtime_error);

    // Not an APWF file at all.
    const fs::path junk = test_dir() / "junk.apwf";
    std::ofstream(junk, std::ios::binary) << "PNG\r\n not this format";
    CHECK_THROWS_AS((void)read_signal(junk), std::runtime_error);

    // Valid header, payload cut short.
    const Grid2D grid(4, 4, 0.5, 0.5, 0.0, 0.0);
    const fs::path cut = test_dir() / "truncated.apwf";
    write_signal(cut, apwt_test::random_signal(grid, 805));
    std::vector<char> bytes = slurp(cut);
    bytes.resize(bytes.size() - 8);
    std::ofstream(cut, std::ios::binary | std::ios::trunc)
        .write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    try {
        (void)read_signal(cut);
        FAIL("read_signal accepted a truncated payload");
    } catch (const std::runtime_error& error) {
        CHECK(std::string(error.what()).find("payload is truncated") != std::string::npos);
    }
}

TEST_CASE("diagram and peak CSVs use the documented layout") {
    const Diagram diagram = ramp_diagram();
    const fs::path csv = test_dir() / "diagram.csv";
    write_diagram_csv(csv, diagram);

    // the ramp's axis samples are exact dyadics, so %.17g prints them tersely
    CHECK(diagram.scale_axis.value(0) == 0.5);
    CHECK(diagram.scale_axis.value(1) == 2.0);
    const std::vector<std::string> lines = read_lines(csv);
    REQUIRE(lines.size() == 1 + 6);
    CHECK(lines[0] == "a,phi,S");
    // scale-major order: first block is a_min with phi ascending
    CHECK(lines[1] == "0.5,-1,0");
    CHECK(lines[2] == "0.5,0,1");
    CHECK(lines[3] == "0.5,1,2");
    CHECK(lines[4] == "2,-1,3");
    CHECK(lines[6] == "2,1,5");

    Peak peak;
    peak.scale = 0.5;
    peak.rapidity = -0.25;
    peak.omega = 8.0;
    peak.v_over_c = -0.1875;
    peak.height = 12.5;
    const fs::path peaks = test_dir() / "peaks.csv";
    write_peaks_csv(peaks, {peak});
    const std::vector<std::string> peak_lines = read_lines(peaks);
    REQUIRE(peak_lines.size() == 2);
    CHECK(peak_lines[0] == "a,phi,omega,v_over_c,height");
    CHECK(peak_lines[1] == "0.5,-0.25,8,-0.1875,12.5");

    write_peaks_csv(peaks, {});
    CHECK(read_lines(peaks) == std::vector<std::string>{"a,phi,omega,v_over_c,height"});
}

TEST_CASE("diagram PGM is a 16-bit min-max heatmap") {
    const Diagram diagram = ramp_diagram();
    const fs::path pgm = test_dir() / "diagram.pgm";
    const PgmScaling scaling = write_diagram_pgm(pgm, diagram);
    CHECK(scaling.min == 0.0);
    CHECK(scaling.max == 5.0);

    const std::vector<char> bytes = slurp(pgm);
    const std::string header = "P5\n3 2\n65535\n";
    REQUIRE(bytes.size() == header.size() + 2 * 6);
    CHECK(std::string(bytes.begin(), bytes.begin() + header.size()) == header);

    // values i/5 of the span map to round(65535*i/5), stored big-endian
    const std::uint16_t expected[6] = {0, 13107, 26214, 39321, 52428, 65535};
    for (std::size_t i = 0; i < 6; ++i) {
        const auto hi = static_cast<unsigned char>(bytes[header.size() + 2 * i]);
        const auto lo = static_cast<unsigned char>(bytes[header.size() + 2 * i + 1]);
        CHECK((hi << 8 | lo) == expected[i]);
    }

    // constant diagrams collapse to level zero instead of dividing by zero
    Diagram flat = ramp_diagram();
    flat.values.assign(6, 3.25);
    const PgmScaling flat_scaling = write_diagram_pgm(pgm, flat);
    CHECK(flat_scaling.min == 3.25);
    CHECK(flat_scaling.max == 3.25);
    const std::vector<char> flat_bytes = slurp(pgm);
    for (std::size_t i = header.size(); i < flat_bytes.size(); ++i)
        CHECK(flat_bytes[i] == '\0');
}
