#include "apwt/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apwt/calibration.hpp"
#include "apwt/checks.hpp"
#include "apwt/config.hpp"
#include "apwt/field.hpp"
#include "apwt/fourier.hpp"
#include "apwt/io.hpp"
#include "apwt/manifest.hpp"
#include "apwt/parallel.hpp"
#include "apwt/sources.hpp"
#include "apwt/transform.hpp"
#include "apwt/wavelets.hpp"

#include <nlohmann/json.hpp>

namespace apwt {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitCheckFailed = 3;
constexpr int kExitIo = 4;

struct ExitError : std::runtime_error {
    int code;
    ExitError(int code_, const std::string& message)
        : std::runtime_error(message), code(code_) {}
};

/// Maps any failure inside `fn` (stream errors, malformed headers, ...) to the
/// I/O exit code, with the offending path in the message.
template <typename Fn>
auto io_guard(const char* action, const fs::path& path, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const ExitError&) {
        throw;
    } catch (const std::exception& e) {
        throw ExitError(kExitIo,
                        std::string(action) + " " + path.string() + ": " + e.what());
    }
}

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

fs::path manifest_path_for(const fs::path& output) {
    return fs::path(output.string() + ".manifest.json");
}

void finish_manifest(RunManifest& manifest, Clock::time_point start, const fs::path& where) {
    manifest.wall_ms = elapsed_ms(start);
    io_guard("writing", where, [&] {
        write_manifest(where, manifest);
        return 0;
    });
}

/// The sector-1 wavelet tuned for the bundled moving-source experiment; used
/// whenever no --config JSON overrides it.
MotherSpec default_mother() { return MotherSpec(Sector::d1, 4.0, 2.0 * std::sqrt(55.0), 8.0); }

MotherSpec load_mother(const std::string& config_path, RunManifest& manifest) {
    if (config_path.empty()) return default_mother();
    const std::string text =
        io_guard("reading", config_path, [&] { return read_text_file(config_path); });
    manifest.config_sha256 = sha256_bytes(text.data(), text.size());
    io_guard("hashing", config_path, [&] {
        manifest.add_input(config_path);
        return 0;
    });
    return parse_mother_spec(text);
}

BoundarySignal load_signal(const std::string& path, RunManifest& manifest) {
    BoundarySignal f = io_guard("reading", path, [&] { return read_signal(path); });
    io_guard("hashing", path, [&] {
        manifest.add_input(path);
        return 0;
    });
    return f;
}

/// Optional overrides of the (a, phi) sampling; each axis is all-or-nothing.
struct SamplingFlags {
    double a_min = 0.0, a_max = 0.0;
    std::size_t a_samples = 0;
    double phi_min = 0.0, phi_max = 0.0;
    std::size_t phi_samples = 0;

    void register_on(CLI::App* cmd) {
        cmd->add_option("--a-min", a_min, "smallest scale sample");
        cmd->add_option("--a-max", a_max, "largest scale sample");
        cmd->add_option("--a-samples", a_samples, "number of scale samples");
        cmd->add_option("--phi-min", phi_min, "smallest rapidity sample");
        cmd->add_option("--phi-max", phi_max, "largest rapidity sample");
        cmd->add_option("--phi-samples", phi_samples, "number of rapidity samples");
    }

    bool scale_given() const { return a_samples != 0 || a_min != 0.0 || a_max != 0.0; }
    bool phi_given() const {
        return phi_samples != 0 || phi_min != 0.0 || phi_max != 0.0;
    }

    /// Sampling with the default scale axis centred on `a_center`; explicit
    /// flags override either axis wholesale.
    MuSampling resolve_with_center(double a_center) const {
        MuSampling sampling = MuSampling::production(a_center);
        if (scale_given()) {
            if (a_samples == 0)
                throw ExitError(kExitValidation,
                                "--a-min/--a-max also need --a-samples");
            sampling.scale = ScaleAxis(a_min, a_max, a_samples);
        }
        if (phi_given()) {
            if (phi_samples == 0)
                throw ExitError(kExitValidation,
                                "--phi-min/--phi-max also need --phi-samples");
            sampling.phi = RapidityAxis(phi_min, phi_max, phi_samples);
        }
        return sampling;
    }

    /// Default sampling centres the scale axis where the sector's energy
    /// lives, which requires a non-empty sector; hence the spectrum argument.
    MuSampling resolve(const Spectrum& fhat, const MotherSpec& spec) const {
        return resolve_with_center(scale_given() ? 1.0 : dominant_scale(fhat, spec));
    }
};

nlohmann::json axis_json(const MuSampling& sampling) {
    return {{"a_min", sampling.scale.a_min},
            {"a_max", sampling.scale.a_max},
            {"a_samples", sampling.scale.count},
            {"phi_min", sampling.phi.phi_min},
            {"phi_max", sampling.phi.phi_max},
            {"phi_samples", sampling.phi.count}};
}

// ---------------------------------------------------------------- commands

int cmd_gen_sources(const std::vector<std::string>& raw_args, const std::string& config_path,
                    const std::string& out, std::optional<std::uint64_t> seed_override) {
    const auto start = Clock::now();
    if (config_path.empty())
        throw ExitError(kExitValidation,
                        "gen-sources requires --config with an experiment description");
    const std::string text =
        io_guard("reading", config_path, [&] { return read_text_file(config_path); });
    ExperimentConfig config = parse_experiment_config(text);
    if (seed_override) config.seed = *seed_override;

    const ExperimentResult result = experiment_field(config);

    RunManifest manifest;
    manifest.command = "gen-sources";
    manifest.arguments = raw_args;
    manifest.config_sha256 = sha256_bytes(text.data(), text.size());
    io_guard("hashing", config_path, [&] {
        manifest.add_input(config_path);
        return 0;
    });
    io_guard("writing", out, [&] {
        write_signal(out, result.boundary);
        return 0;
    });
    io_guard("hashing", out, [&] {
        manifest.add_output(out);
        return 0;
    });
    std::size_t total_sources = 0;
    for (const SourceGroup& group : config.groups) total_sources += group.n_sources;
    manifest.counters["seed"] = config.seed;
    manifest.counters["groups"] = config.groups.size();
    manifest.counters["sources"] = total_sources;
    manifest.counters["speed_redraws"] = result.speed_redraws;
    manifest.counters["grid"] = {config.grid.n_t, config.grid.n_x};
    finish_manifest(manifest, start, manifest_path_for(out));

    std::printf("gen-sources: %zu sources in %zu groups -> %s (%zu x %zu, %zu speed redraws)\n",
                total_sources, config.groups.size(), out.c_str(), config.grid.n_t,
                config.grid.n_x, result.speed_redraws);
    return kExitOk;
}

int cmd_transform(const std::vector<std::string>& raw_args, const std::string& field_path,
                  const std::string& config_path, const std::string& out,
                  const SamplingFlags& flags) {
    const auto start = Clock::now();
    RunManifest manifest;
    manifest.command = "transform";
    manifest.arguments = raw_args;

    const MotherSpec spec = load_mother(config_path, manifest);
    const BoundarySignal f = load_signal(field_path, manifest);
    const Spectrum fhat = forward_fourier(f);
    const MuSampling sampling = flags.resolve(fhat, spec);

    const CoefficientGrid coeffs = apwt_grid(fhat, spec, sampling);
    io_guard("writing", out, [&] {
        write_coefficient_grid(out, coeffs);
        return 0;
    });
    io_guard("hashing", out, [&] {
        manifest.add_output(out);
        return 0;
    });
    manifest.counters["sampling"] = axis_json(sampling);
    manifest.counters["coefficients"] = coeffs.values.size();
    finish_manifest(manifest, start, manifest_path_for(out));

    std::printf("transform: %zu x %zu (a, phi) slabs on %zu x %zu shifts -> %s\n",
                sampling.scale.count, sampling.phi.count, f.grid.n_t, f.grid.n_x, out.c_str());
    return kExitOk;
}

int cmd_diagram(const std::vector<std::string>& raw_args, const std::string& field_path,
                const std::string& config_path, const std::string& out_csv,
                const std::string& out_pgm, std::string out_peaks,
                const std::string& out_apwf, std::size_t peak_count, bool no_calibrate,
                const SamplingFlags& flags) {
    const auto start = Clock::now();
    RunManifest manifest;
    manifest.command = "diagram";
    manifest.arguments = raw_args;

    const MotherSpec spec = load_mother(config_path, manifest);
    if (spec.sector == Sector::d3 || spec.sector == Sector::d4)
        throw ExitError(kExitValidation,
                        "diagram: the scale-rapidity diagram is defined for the propagating "
                        "sectors 1 and 2 only");
    const BoundarySignal f = load_signal(field_path, manifest);
    const Spectrum fhat = forward_fourier(f);

    if (out_peaks.empty()) out_peaks = out_csv + ".peaks.csv";

    Diagram diagram;
    std::vector<Peak> peaks;
    double kappa_eff = spec.kappa;
    bool empty_sector = false;
    MuSampling sampling;
    try {
        sampling = flags.resolve(fhat, spec);
    } catch (const std::domain_error&) {
        empty_sector = true;
        // keep the output shape deterministic: an all-zero diagram over the
        // default axes centred on a = kappa
        sampling = flags.resolve_with_center(spec.kappa);
    }
    if (empty_sector) {
        std::fprintf(stderr,
                     "diagram: warning: the input carries no energy in sector %s; writing an "
                     "all-zero diagram\n",
                     sector_name(spec.sector).c_str());
        diagram.scale_axis = sampling.scale;
        diagram.phi_axis = sampling.phi;
        diagram.values.assign(sampling.scale.count * sampling.phi.count, 0.0);
    } else {
        diagram = scale_rapidity_diagram(f, spec, sampling, {});
        if (!no_calibrate) {
            try {
                kappa_eff = measure_frequency_calibration(spec, f.grid).kappa_eff;
            } catch (const std::exception& e) {
                std::fprintf(stderr,
                             "diagram: warning: frequency calibration failed (%s); the omega "
                             "column uses the nominal kappa\n",
                             e.what());
            }
        }
        peaks = detect_peaks(diagram, peak_count, kappa_eff);
    }

    io_guard("writing", out_csv, [&] {
        write_diagram_csv(out_csv, diagram);
        return 0;
    });
    io_guard("hashing", out_csv, [&] {
        manifest.add_output(out_csv);
        return 0;
    });
    io_guard("writing", out_peaks, [&] {
        write_peaks_csv(out_peaks, peaks);
        return 0;
    });
    io_guard("hashing", out_peaks, [&] {
        manifest.add_output(out_peaks);
        return 0;
    });
    const PgmScaling scaling = io_guard("writing", out_pgm, [&] {
        return write_diagram_pgm(out_pgm, diagram);
    });
    io_guard("hashing", out_pgm, [&] {
        manifest.add_output(out_pgm);
        return 0;
    });
    if (!out_apwf.empty()) {
        io_guard("writing", out_apwf, [&] {
            write_diagram(out_apwf, diagram);
            return 0;
        });
        io_guard("hashing", out_apwf, [&] {
            manifest.add_output(out_apwf);
            return 0;
        });
    }

    manifest.counters["sampling"] = axis_json(sampling);
    manifest.counters["kappa_eff"] = kappa_eff;
    manifest.counters["pgm_min"] = scaling.min;
    manifest.counters["pgm_max"] = scaling.max;
    manifest.counters["peaks"] = peaks.size();
    manifest.counters["empty_sector"] = empty_sector;
    finish_manifest(manifest, start, manifest_path_for(out_csv));

    std::printf("diagram: %zu x %zu cells, %zu peaks -> %s, %s, %s\n", sampling.scale.count,
                sampling.phi.count, peaks.size(), out_csv.c_str(), out_peaks.c_str(),
                out_pgm.c_str());
    for (const Peak& p : peaks)
        std::printf("  peak a %.6f  phi %+.4f  omega %.6f  v/c %+.4f  S %.6e\n", p.scale,
                    p.rapidity, p.omega, p.v_over_c, p.height);
    return kExitOk;
}

int cmd_reconstruct(const std::vector<std::string>& raw_args, const std::string& field_path,
                    const std::string& config_path, double y, const std::string& out,
                    const SamplingFlags& flags) {
    const auto start = Clock::now();
    if (!(y >= 0.0) || !std::isfinite(y))
        throw ExitError(kExitValidation, "reconstruct: --y must be finite and >= 0");

    RunManifest manifest;
    manifest.command = "reconstruct";
    manifest.arguments = raw_args;

    const std::string kind =
        io_guard("reading", field_path, [&] { return apwf_kind(field_path); });

    Grid2D grid;
    int sector_tag = 0;
    ComplexMatrix values;
    if (kind == "CG") {
        const CoefficientGrid coeffs =
            io_guard("reading", field_path, [&] { return read_coefficient_grid(field_path); });
        io_guard("hashing", field_path, [&] {
            manifest.add_input(field_path);
            return 0;
        });
        const double admissibility = admissibility_constant(coeffs.mother).value;
        const BoundarySignal rebuilt = reconstruct(coeffs, admissibility, y, coeffs.b_grid);
        grid = rebuilt.grid;
        sector_tag = static_cast<int>(coeffs.mother.sector);
        values = rebuilt.values;
        manifest.counters["path"] = "coefficient-grid";
    } else if (kind == "TX") {
        const MotherSpec spec = load_mother(config_path, manifest);
        const BoundarySignal f = load_signal(field_path, manifest);
        grid = f.grid;
        sector_tag = static_cast<int>(spec.sector);
        try {
            const MuSampling sampling = flags.resolve(forward_fourier(f), spec);
            const double admissibility = admissibility_constant(spec).value;
            values = reconstruct_streamed(f, spec, sampling, admissibility, y).values;
            manifest.counters["sampling"] = axis_json(sampling);
        } catch (const std::domain_error&) {
            std::fprintf(stderr,
                         "reconstruct: warning: the input carries no energy in sector %s; "
                         "writing a zero slice\n",
                         sector_name(spec.sector).c_str());
            values = ComplexMatrix(grid.n_t, grid.n_x);
        }
        manifest.counters["path"] = "streamed";
    } else {
        throw ExitError(kExitValidation,
                        "reconstruct: expected a boundary-signal (TX) or coefficient-grid "
                        "(CG) file, got kind " +
                            kind);
    }

    io_guard("writing", out, [&] {
        write_field_slice(out, grid, y, sector_tag, values);
        return 0;
    });
    io_guard("hashing", out, [&] {
        manifest.add_output(out);
        return 0;
    });
    manifest.counters["y"] = y;
    finish_manifest(manifest, start, manifest_path_for(out));

    std::printf("reconstruct: sector %d slice at y %.6g -> %s\n", sector_tag, y, out.c_str());
    return kExitOk;
}

int cmd_propagate(const std::vector<std::string>& raw_args, const std::string& field_path,
                  std::vector<double> heights, const std::string& out_dir) {
    const auto start = Clock::now();
    if (heights.empty())
        throw ExitError(kExitValidation, "propagate: give at least one --y height");
    for (double y : heights)
        if (!(y >= 0.0) || !std::isfinite(y))
            throw ExitError(kExitValidation,
                            "propagate: heights must be finite and >= 0 (the solver "
                            "extends boundary data upward)");

    RunManifest manifest;
    manifest.command = "propagate";
    manifest.arguments = raw_args;
    const BoundarySignal f = load_signal(field_path, manifest);

    const fs::path dir(out_dir);
    io_guard("creating", dir, [&] {
        fs::create_directories(dir);
        return 0;
    });

    const HalfPlaneField field = solve_halfplane(f, heights);
    char name[64];
    for (std::size_t i = 0; i < heights.size(); ++i) {
        for (int j = 1; j <= 4; ++j) {
            std::snprintf(name, sizeof name, "slice_y%03zu_d%d.apwf", i, j);
            const fs::path path = dir / name;
            const FieldSlice& slice = field.slices[i * 4 + static_cast<std::size_t>(j - 1)];
            io_guard("writing", path, [&] {
                write_field_slice(path, f.grid, heights[i], j, slice.values);
                return 0;
            });
            io_guard("hashing", path, [&] {
                manifest.add_output(path);
                return 0;
            });
        }
        std::snprintf(name, sizeof name, "total_y%03zu.apwf", i);
        const fs::path path = dir / name;
        io_guard("writing", path, [&] {
            write_field_slice(path, f.grid, heights[i], 0, field.totals[i]);
            return 0;
        });
        io_guard("hashing", path, [&] {
            manifest.add_output(path);
            return 0;
        });
    }
    manifest.counters["heights"] = heights;
    finish_manifest(manifest, start, dir / "manifest.json");

    std::printf("propagate: %zu heights x 4 sectors + totals -> %s\n", heights.size(),
                out_dir.c_str());
    return kExitOk;
}

int cmd_selfcheck(const std::vector<std::string>& raw_args, const std::string& level,
                  const std::string& report_path, double tamper_family_norm) {
    const auto start = Clock::now();
    if (level != "quick" && level != "full")
        throw ExitError(kExitValidation, "selfcheck: level must be 'quick' or 'full'");

    CheckOptions options;
    options.tamper_family_norm = tamper_family_norm;
    const std::vector<CheckResult> results =
        level == "quick" ? run_quick_checks(options) : run_full_checks(options);

    for (const CheckResult& r : results)
        std::printf("%s  %-28s %7.2fs  %s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.seconds, r.details.c_str());
    const bool ok = all_passed(results);
    std::printf("selfcheck %s: %s\n", level.c_str(), ok ? "all checks passed" : "FAILURES");

    RunManifest manifest;
    manifest.command = "selfcheck";
    manifest.arguments = raw_args;
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& r : results)
        checks.push_back({{"name", r.name},
                          {"pass", r.pass},
                          {"seconds", r.seconds},
                          {"details", r.details}});
    nlohmann::json report = {{"level", level},
                             {"all_passed", ok},
                             {"library_version", kVersion},
                             {"checks", checks}};
    io_guard("writing", report_path, [&] {
        std::ofstream out(report_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open for writing");
        out << report.dump(2) << "\n";
        if (!out) throw std::runtime_error("write failed");
        return 0;
    });
    io_guard("hashing", report_path, [&] {
        manifest.add_output(report_path);
        return 0;
    });
    manifest.counters["checks"] = results.size();
    manifest.counters["all_passed"] = ok;
    finish_manifest(manifest, start, manifest_path_for(report_path));

    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"affine Poincare wavelet analysis of 2+1D wave boundary data"};
    app.require_subcommand(0, 1);

    std::size_t threads = 0;
    app.add_option("--threads", threads,
                   "worker thread cap (falls back to the APWT_THREADS environment variable)");
    std::optional<std::uint64_t> seed_override;
    app.add_option("--seed", seed_override, "override the seed of a seeded command");
    std::string config_path;
    app.add_option("--config", config_path,
                   "JSON configuration (experiment description or wavelet parameters, "
                   "depending on the subcommand)");

    // gen-sources
    auto* gen = app.add_subcommand("gen-sources",
                                   "synthesise moving-source boundary data from --config");
    gen->fallthrough();
    std::string gen_out;
    gen->add_option("--out", gen_out, "output APWF boundary-signal path")->required();

    // transform
    auto* transform =
        app.add_subcommand("transform", "full coefficient grid of a boundary signal");
    transform->fallthrough();
    std::string transform_field, transform_out;
    transform->add_option("--field", transform_field, "input APWF boundary signal")->required();
    transform->add_option("--out", transform_out, "output APWF coefficient grid")->required();
    SamplingFlags transform_sampling;
    transform_sampling.register_on(transform);

    // diagram
    auto* diagram = app.add_subcommand("diagram", "scale-rapidity energy diagram and peaks");
    diagram->fallthrough();
    std::string diagram_field, diagram_csv, diagram_pgm, diagram_peaks, diagram_apwf;
    std::size_t diagram_peak_count = 16;
    bool diagram_no_calibrate = false;
    diagram->add_option("--field", diagram_field, "input APWF boundary signal")->required();
    diagram->add_option("--out-csv", diagram_csv, "diagram table (a, phi, S)")->required();
    diagram->add_option("--out-pgm", diagram_pgm, "16-bit heatmap")->required();
    diagram->add_option("--out-peaks", diagram_peaks,
                        "peak table (default: <out-csv>.peaks.csv)");
    diagram->add_option("--out-apwf", diagram_apwf, "optional binary diagram dump");
    diagram->add_option("--peak-count", diagram_peak_count, "maximum peaks to report");
    diagram->add_flag("--no-calibrate", diagram_no_calibrate,
                      "skip the frequency calibration run (omega column uses kappa)");
    SamplingFlags diagram_sampling;
    diagram_sampling.register_on(diagram);

    // reconstruct
    auto* reconstruct_cmd = app.add_subcommand(
        "reconstruct", "resolution-of-identity field slice from a signal or coefficients");
    reconstruct_cmd->fallthrough();
    std::string reconstruct_field, reconstruct_out;
    double reconstruct_y = 0.0;
    reconstruct_cmd->add_option("--field", reconstruct_field,
                                "input APWF (boundary signal or coefficient grid)")
        ->required();
    reconstruct_cmd->add_option("--y", reconstruct_y, "height of the reconstructed slice");
    reconstruct_cmd->add_option("--out", reconstruct_out, "output APWF field slice")
        ->required();
    SamplingFlags reconstruct_sampling;
    reconstruct_sampling.register_on(reconstruct_cmd);

    // propagate
    auto* propagate_cmd =
        app.add_subcommand("propagate", "per-sector upward continuation to given heights");
    propagate_cmd->fallthrough();
    std::string propagate_field, propagate_dir;
    std::vector<double> propagate_heights;
    propagate_cmd->add_option("--field", propagate_field, "input APWF boundary signal")
        ->required();
    propagate_cmd->add_option("--y", propagate_heights, "height(s) to continue to")
        ->required();
    propagate_cmd->add_option("--out-dir", propagate_dir, "output directory")->required();

    // selfcheck
    auto* selfcheck = app.add_subcommand("selfcheck", "run the verification suite");
    selfcheck->fallthrough();
    std::string selfcheck_level = "quick";
    std::string selfcheck_report = "apwt_selfcheck.json";
    double tamper_family_norm = 1.0;
    selfcheck->add_option("level", selfcheck_level, "quick (sub-minute) or full");
    selfcheck->add_option("--report", selfcheck_report, "JSON report path");
    selfcheck
        ->add_option("--tamper-family-norm", tamper_family_norm,
                     "negative-control hook: scale the family norm inside the Plancherel sum")
        ->group("");  // hidden from help

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    if (threads == 0) {
        if (const char* env = std::getenv("APWT_THREADS")) {
            char* end = nullptr;
            const unsigned long parsed = std::strtoul(env, &end, 10);
            if (end && *end == '\0' && parsed > 0) threads = parsed;
        }
    }
    if (threads > 0) set_max_threads(threads);

    try {
        if (gen->parsed())
            return cmd_gen_sources(args, config_path, gen_out, seed_override);
        if (transform->parsed())
            return cmd_transform(args, transform_field, config_path, transform_out,
                                 transform_sampling);
        if (diagram->parsed())
            return cmd_diagram(args, diagram_field, config_path, diagram_csv, diagram_pgm,
                               diagram_peaks, diagram_apwf, diagram_peak_count,
                               diagram_no_calibrate, diagram_sampling);
        if (reconstruct_cmd->parsed())
            return cmd_reconstruct(args, reconstruct_field, config_path, reconstruct_y,
                                   reconstruct_out, reconstruct_sampling);
        if (propagate_cmd->parsed())
            return cmd_propagate(args, propagate_field, propagate_heights, propagate_dir);
        if (selfcheck->parsed())
            return cmd_selfcheck(args, selfcheck_level, selfcheck_report, tamper_family_norm);
        std::printf("%s", app.help().c_str());
        return kExitOk;
    } catch (const ExitError& e) {
        std::fprintf(stderr, "apwt: %s\n", e.what());
        return e.code;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "apwt: %s\n", e.what());
        return kExitValidation;
    }
}

}  // namespace apwt
