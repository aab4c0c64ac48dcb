#include "apwt/io.hpp"

#include <bit>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "apwt/sectors.hpp"

static_assert(std::endian::native == std::endian::little,
              "APWF/1 I/O assumes a little-endian host");

namespace apwt {

namespace {

constexpr std::size_t kBlock = 64;
constexpr const char* kMagicPrefix = "APWF/1 h=";

std::string hexd(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", v);
    return buf;
}

double parse_double(const std::string& text, const std::string& context) {
    const char* begin = text.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + text.size())
        throw std::runtime_error("APWF: malformed number in " + context + ": '" + text + "'");
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, sep)) parts.push_back(item);
    return parts;
}

/// "APWF/1 h=<N> <body>" padded with spaces to the multiple-of-64 length N.
std::string compose_header(const std::string& body) {
    const std::size_t base = std::string(kMagicPrefix).size();
    for (int digits = 2; digits <= 9; ++digits) {
        const std::size_t raw = base + static_cast<std::size_t>(digits) + 1 + body.size() + 1;
        const std::size_t total = kBlock * ((raw + kBlock - 1) / kBlock);
        if (std::to_string(total).size() != static_cast<std::size_t>(digits)) continue;
        std::string header = kMagicPrefix + std::to_string(total) + " " + body;
        header.append(total - header.size() - 1, ' ');
        header.push_back('\n');
        return header;
    }
    throw std::logic_error("APWF: header size did not converge");
}

struct Header {
    std::string kind;
    std::map<std::string, std::string> fields;

    const std::string& at(const char* key, const std::filesystem::path& path) const {
        auto it = fields.find(key);
        if (it == fields.end())
            throw std::runtime_error("APWF: " + path.string() + " is missing header field '" +
                                     key + "'");
        return it->second;
    }
};

Header read_header(std::ifstream& stream, const std::filesystem::path& path) {
    std::string first(kBlock, '\0');
    stream.read(first.data(), static_cast<std::streamsize>(kBlock));
    if (stream.gcount() != static_cast<std::streamsize>(kBlock) ||
        first.rfind(kMagicPrefix, 0) != 0)
        throw std::runtime_error("APWF: " + path.string() + " is not an APWF/1 file");
    std::size_t total = 0;
    try {
        total = std::stoul(first.substr(std::string(kMagicPrefix).size()));
    } catch (const std::exception&) {
        throw std::runtime_error("APWF: " + path.string() + " has a malformed header length");
    }
    if (total < kBlock || total % kBlock != 0)
        throw std::runtime_error("APWF: " + path.string() + " header length " +
                                 std::to_string(total) + " is not a positive multiple of 64");
    std::string text = first;
    if (total > kBlock) {
        std::string rest(total - kBlock, '\0');
        stream.read(rest.data(), static_cast<std::streamsize>(total - kBlock));
        if (stream.gcount() != static_cast<std::streamsize>(total - kBlock))
            throw std::runtime_error("APWF: " + path.string() + " is truncated in the header");
        text += rest;
    }

    Header header;
    std::istringstream tokens(text);
    std::string token;
    tokens >> token;  // magic
    tokens >> token;  // h=N
    while (tokens >> token) {
        const std::size_t eq = token.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("APWF: " + path.string() + " has a malformed header token '" +
                                     token + "'");
        header.fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
    header.kind = header.at("s", path);
    return header;
}

void write_file(const std::filesystem::path& path, const std::string& body,
                const Complex* payload, std::size_t count) {
    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("APWF: cannot open " + path.string() + " for writing");
    const std::string header = compose_header(body);
    stream.write(header.data(), static_cast<std::streamsize>(header.size()));
    stream.write(reinterpret_cast<const char*>(payload),
                 static_cast<std::streamsize>(count * sizeof(Complex)));
    if (!stream) throw std::runtime_error("APWF: write to " + path.string() + " failed");
}

std::vector<Complex> read_payload(std::ifstream& stream, const std::filesystem::path& path,
                                  std::size_t count) {
    std::vector<Complex> values(count);
    stream.read(reinterpret_cast<char*>(values.data()),
                static_cast<std::streamsize>(count * sizeof(Complex)));
    if (stream.gcount() != static_cast<std::streamsize>(count * sizeof(Complex)))
        throw std::runtime_error("APWF: " + path.string() + " payload is truncated");
    return values;
}

std::string grid_body(const Grid2D& grid) {
    return "n=" + std::to_string(grid.n_t) + "," + std::to_string(grid.n_x) + " d=" +
           hexd(grid.dt) + "," + hexd(grid.dx) + " o=" + hexd(grid.origin_t) + "," +
           hexd(grid.origin_x);
}

Grid2D parse_grid(const Header& header, const std::filesystem::path& path) {
    const std::vector<std::string> n = split(header.at("n", path), ',');
    const std::vector<std::string> d = split(header.at("d", path), ',');
    const std::vector<std::string> o = split(header.at("o", path), ',');
    if (n.size() != 2 || d.size() != 2 || o.size() != 2)
        throw std::runtime_error("APWF: " + path.string() + " has malformed lattice fields");
    return Grid2D{static_cast<std::size_t>(std::stoull(n[0])),
                  static_cast<std::size_t>(std::stoull(n[1])),
                  parse_double(d[0], "d"),
                  parse_double(d[1], "d"),
                  parse_double(o[0], "o"),
                  parse_double(o[1], "o")};
}

std::string phi_axis_body(const RapidityAxis& axis) {
    return "pa=" + std::to_string(axis.count) + ":" + hexd(axis.phi_min) + ":" +
           hexd(axis.phi_max);
}

std::string scale_axis_body(const ScaleAxis& axis) {
    return "sa=" + std::to_string(axis.count) + ":" + hexd(axis.a_min) + ":" +
           hexd(axis.a_max);
}

RapidityAxis parse_phi_axis(const Header& header, const std::filesystem::path& path) {
    const std::vector<std::string> parts = split(header.at("pa", path), ':');
    if (parts.size() != 3)
        throw std::runtime_error("APWF: " + path.string() + " has a malformed pa field");
    return RapidityAxis(parse_double(parts[1], "pa"), parse_double(parts[2], "pa"),
                        std::stoull(parts[0]));
}

ScaleAxis parse_scale_axis(const Header& header, const std::filesystem::path& path) {
    const std::vector<std::string> parts = split(header.at("sa", path), ':');
    if (parts.size() != 3)
        throw std::runtime_error("APWF: " + path.string() + " has a malformed sa field");
    return ScaleAxis(parse_double(parts[1], "sa"), parse_double(parts[2], "sa"),
                     std::stoull(parts[0]));
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw std::runtime_error("APWF: cannot read " + path.string());
    return stream;
}

Header expect_kind(std::ifstream& stream, const std::filesystem::path& path, const char* kind) {
    Header header = read_header(stream, path);
    if (header.kind != kind)
        throw std::runtime_error("APWF: " + path.string() + " holds '" + header.kind +
                                 "' data, expected '" + kind + "'");
    return header;
}

}  // namespace

void write_signal(const std::filesystem::path& path, const BoundarySignal& signal) {
    write_file(path, "s=TX " + grid_body(signal.grid), signal.values.data(),
               signal.values.size());
}

BoundarySignal read_signal(const std::filesystem::path& path) {
    std::ifstream stream = open_input(path);
    const Header header = expect_kind(stream, path, "TX");
    const Grid2D grid = parse_grid(header, path);
    ComplexMatrix values(grid.n_t, grid.n_x);
    values.values() = read_payload(stream, path, grid.count());
    return BoundarySignal(grid, std::move(values));
}

void write_spectrum(const std::filesystem::path& path, const Spectrum& spectrum) {
    write_file(path, "s=WK " + grid_body(spectrum.signal_grid), spectrum.values.data(),
               spectrum.values.size());
}

Spectrum read_spectrum(const std::filesystem::path& path) {
    std::ifstream stream = open_input(path);
    const Header header = expect_kind(stream, path, "WK");
    const Grid2D grid = parse_grid(header, path);
    ComplexMatrix values(grid.n_t, grid.n_x);
    values.values() = read_payload(stream, path, grid.count());
    return Spectrum(grid, std::move(values));
}

void write_field_slice(const std::filesystem::path& path, const Grid2D& grid, double y,
                       int sector_tag, const ComplexMatrix& values) {
    if (sector_tag < 0 || sector_tag > 4)
        throw std::invalid_argument("APWF: field-slice sector tag must be 0..4");
    if (values.rows() != grid.n_t || values.cols() != grid.n_x)
        throw std::invalid_argument("APWF: field-slice values do not match the lattice");
    write_file(path,
               "s=FS " + grid_body(grid) + " y=" + hexd(y) +
                   " sec=" + std::to_string(sector_tag),
               values.data(), values.size());
}

FieldSliceFile read_field_slice(const std::filesystem::path& path) {
    std::ifstream stream = open_input(path);
    const Header header = expect_kind(stream, path, "FS");
    FieldSliceFile slice;
    slice.grid = parse_grid(header, path);
    slice.y = parse_double(header.at("y", path), "y");
    slice.sector_tag = std::stoi(header.at("sec", path));
    slice.values = ComplexMatrix(slice.grid.n_t, slice.grid.n_x);
    slice.values.values() = read_payload(stream, path, slice.grid.count());
    return slice;
}

void write_coefficient_grid(const std::filesystem::path& path, const CoefficientGrid& grid) {
    const MotherSpec& m = grid.mother;
    const std::string body = "s=CG " + grid_body(grid.b_grid) + " " +
                             phi_axis_body(grid.phi_axis) + " " +
                             scale_axis_body(grid.scale_axis) +
                             " mother=" + std::to_string(static_cast<int>(m.sector)) + "," +
                             hexd(m.kappa) + "," + hexd(m.sigma_par) + "," + hexd(m.sigma_perp);
    write_file(path, body, grid.values.data(), grid.values.size());
}

CoefficientGrid read_coefficient_grid(const std::filesystem::path& path) {
    std::ifstream stream = open_input(path);
    const Header header = expect_kind(stream, path, "CG");
    const std::vector<std::string> mother = split(header.at("mother", path), ',');
    if (mother.size() != 4)
        throw std::runtime_error("APWF: " + path.string() + " has a malformed mother field");
    CoefficientGrid grid;
    grid.b_grid = parse_grid(header, path);
    grid.phi_axis = parse_phi_axis(header, path);
    grid.scale_axis = parse_scale_axis(header, path);
    grid.mother = MotherSpec(sector_from_int(std::stoi(mother[0])),
                             parse_double(mother[1], "mother"),
                             parse_double(mother[2], "mother"),
                             parse_double(mother[3], "mother"));
    grid.values = read_payload(
        stream, path, grid.phi_axis.count * grid.scale_axis.count * grid.b_grid.count());
    return grid;
}

void write_diagram(const std::filesystem::path& path, const Diagram& diagram) {
    std::vector<Complex> payload(diagram.values.size());
    for (std::size_t i = 0; i < diagram.values.size(); ++i)
        payload[i] = Complex(diagram.values[i], 0.0);
    const std::string body =
        "s=DG " + phi_axis_body(diagram.phi_axis) + " " + scale_axis_body(diagram.scale_axis);
    write_file(path, body, payload.data(), payload.size());
}

Diagram read_diagram(const std::filesystem::path& path) {
    std::ifstream stream = open_input(path);
    const Header header = expect_kind(stream, path, "DG");
    Diagram diagram;
    diagram.phi_axis = parse_phi_axis(header, path);
    diagram.scale_axis = parse_scale_axis(header, path);
    const std::vector<Complex> payload =
        read_payload(stream, path, diagram.phi_axis.count * diagram.scale_axis.count);
    diagram.values.resize(payload.size());
    for (std::size_t i = 0; i < payload.size(); ++i) diagram.values[i] = payload[i].real();
    return diagram;
}

std::string apwf_kind(const std::filesystem::path& path) {
    std::ifstream stream = open_input(path);
    return read_header(stream, path).kind;
}

void write_diagram_csv(const std::filesystem::path& path, const Diagram& diagram) {
    std::ofstream stream(path, std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + path.string() + " for writing");
    stream << "a,phi,S\n";
    char line[96];
    for (std::size_t ia = 0; ia < diagram.scale_axis.count; ++ia) {
        for (std::size_t ip = 0; ip < diagram.phi_axis.count; ++ip) {
            std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g\n", diagram.scale_axis.value(ia),
                          diagram.phi_axis.value(ip), diagram.at(ia, ip));
            stream << line;
        }
    }
    if (!stream) throw std::runtime_error("write to " + path.string() + " failed");
}

void write_peaks_csv(const std::filesystem::path& path, const std::vector<Peak>& peaks) {
    std::ofstream stream(path, std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + path.string() + " for writing");
    stream << "a,phi,omega,v_over_c,height\n";
    char line[160];
    for (const Peak& p : peaks) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.scale, p.rapidity,
                      p.omega, p.v_over_c, p.height);
        stream << line;
    }
    if (!stream) throw std::runtime_error("write to " + path.string() + " failed");
}

PgmScaling write_diagram_pgm(const std::filesystem::path& path, const Diagram& diagram) {
    PgmScaling scaling;
    scaling.min = diagram.values.empty() ? 0.0 : diagram.values.front();
    scaling.max = scaling.min;
    for (double v : diagram.values) {
        scaling.min = std::min(scaling.min, v);
        scaling.max = std::max(scaling.max, v);
    }
    const double span = scaling.max - scaling.min;

    std::ofstream stream(path, std::ios::binary | std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + path.string() + " for writing");
    stream << "P5\n"
           << diagram.phi_axis.count << " " << diagram.scale_axis.count << "\n65535\n";
    for (std::size_t ia = 0; ia < diagram.scale_axis.count; ++ia) {
        for (std::size_t ip = 0; ip < diagram.phi_axis.count; ++ip) {
            const double unit = span > 0.0 ? (diagram.at(ia, ip) - scaling.min) / span : 0.0;
            const auto level = static_cast<unsigned>(std::lround(unit * 65535.0));
            const char bytes[2] = {static_cast<char>((level >> 8) & 0xff),
                                   static_cast<char>(level & 0xff)};
            stream.write(bytes, 2);
        }
    }
    if (!stream) throw std::runtime_error("write to " + path.string() + " failed");
    return scaling;
}

}  // namespace apwt
