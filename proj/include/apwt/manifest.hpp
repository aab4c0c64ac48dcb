#pragma once

/// Run manifests: every CLI command writes a JSON record of what it read,
/// what it wrote (with SHA-256 digests), and the counters of the run, so any
/// artifact can be re-derived and byte-verified.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace apwt {

inline constexpr const char* kVersion = "0.1.0";

struct FileRecord {
    std::string path;
    std::string sha256;
    std::uint64_t bytes = 0;
};

struct RunManifest {
    std::string command;
    std::vector<std::string> arguments;
    std::string config_sha256;  ///< digest of the main config file, empty if none
    std::vector<FileRecord> inputs;
    std::vector<FileRecord> outputs;
    double wall_ms = 0.0;
    nlohmann::json counters = nlohmann::json::object();

    void add_input(const std::filesystem::path& path);
    void add_output(const std::filesystem::path& path);
};

std::string sha256_bytes(const void* data, std::size_t size);
std::string sha256_file(const std::filesystem::path& path);

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

}  // namespace apwt
