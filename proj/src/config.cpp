#include "apwt/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "apwt/sectors.hpp"

namespace apwt {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
    throw std::invalid_argument("config: " + field + " " + what);
}

const json& require(const json& j, const std::string& field, const char* key) {
    if (!j.is_object()) fail(field, "must be an object");
    auto it = j.find(key);
    if (it == j.end()) fail(field + "." + key, "is required");
    return *it;
}

double number(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "must be a number");
    return j.get<double>();
}

double positive(const json& j, const std::string& field) {
    const double v = number(j, field);
    if (!(v > 0.0)) fail(field, "must be positive");
    return v;
}

std::size_t count_at_least(const json& j, const std::string& field, std::size_t minimum) {
    if (!j.is_number_unsigned()) fail(field, "must be a non-negative integer");
    const std::size_t v = j.get<std::size_t>();
    if (v < minimum) fail(field, "must be at least " + std::to_string(minimum));
    return v;
}

json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("config: not valid JSON");
    return j;
}

Grid2D parse_grid(const json& j, const std::string& field) {
    const std::size_t n_t = count_at_least(require(j, field, "n_t"), field + ".n_t", 2);
    const std::size_t n_x = count_at_least(require(j, field, "n_x"), field + ".n_x", 2);
    const double dt = positive(require(j, field, "dt"), field + ".dt");
    const double dx = positive(require(j, field, "dx"), field + ".dx");
    const double origin_t = number(require(j, field, "origin_t"), field + ".origin_t");
    const double origin_x = number(require(j, field, "origin_x"), field + ".origin_x");
    return Grid2D{n_t, n_x, dt, dx, origin_t, origin_x};
}

SourceGroup parse_group(const json& j, const std::string& field) {
    SourceGroup g;
    g.omega = positive(require(j, field, "omega"), field + ".omega");
    g.phi_mean = number(require(j, field, "phi_mean"), field + ".phi_mean");
    g.n_sources = count_at_least(require(j, field, "n_sources"), field + ".n_sources", 1);
    g.depth = number(require(j, field, "depth"), field + ".depth");
    if (!(g.depth < 0.0)) fail(field + ".depth", "must be negative");
    if (auto it = j.find("speed_sigma"); it != j.end()) {
        g.speed_sigma = number(*it, field + ".speed_sigma");
        if (g.speed_sigma < 0.0) fail(field + ".speed_sigma", "must be non-negative");
    }
    if (auto it = j.find("x_offsets"); it != j.end()) {
        if (!it->is_array()) fail(field + ".x_offsets", "must be an array");
        if (it->size() != g.n_sources)
            fail(field + ".x_offsets",
                 "must have n_sources = " + std::to_string(g.n_sources) + " entries");
        for (std::size_t i = 0; i < it->size(); ++i)
            g.x_offsets.push_back(
                number((*it)[i], field + ".x_offsets[" + std::to_string(i) + "]"));
    }
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned()) fail(field + ".seed", "must be a non-negative integer");
        g.seed = it->get<std::uint64_t>();
    }
    return g;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& json_text) {
    const json j = parse_document(json_text);
    ExperimentConfig config;
    config.grid = parse_grid(require(j, "experiment", "grid"), "grid");
    if (auto it = j.find("c"); it != j.end()) config.c = positive(*it, "c");
    if (auto it = j.find("seed"); it != j.end()) {
        if (!it->is_number_unsigned()) fail("seed", "must be a non-negative integer");
        config.seed = it->get<std::uint64_t>();
    }
    const json& groups = require(j, "experiment", "groups");
    if (!groups.is_array() || groups.empty()) fail("groups", "must be a non-empty array");
    for (std::size_t i = 0; i < groups.size(); ++i)
        config.groups.push_back(parse_group(groups[i], "groups[" + std::to_string(i) + "]"));
    return config;
}

MotherSpec parse_mother_spec(const std::string& json_text) {
    const json j = parse_document(json_text);
    const json& sector = require(j, "mother", "sector");
    if (!sector.is_number_integer()) fail("sector", "must be an integer in 1..4");
    MotherSpec spec(sector_from_int(sector.get<int>()),
                    positive(require(j, "mother", "kappa"), "kappa"),
                    positive(require(j, "mother", "sigma_par"), "sigma_par"),
                    positive(require(j, "mother", "sigma_perp"), "sigma_perp"));
    return spec;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

}  // namespace apwt
