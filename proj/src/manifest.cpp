#include "apwt/manifest.hpp"

#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

#include <openssl/evp.h>

namespace apwt {

namespace {

using EvpContext = std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)>;

std::string hex_digest(const unsigned char* digest, unsigned length) {
    static const char* alphabet = "0123456789abcdef";
    std::string hex(length * 2, '0');
    for (unsigned i = 0; i < length; ++i) {
        hex[2 * i] = alphabet[digest[i] >> 4];
        hex[2 * i + 1] = alphabet[digest[i] & 0x0f];
    }
    return hex;
}

FileRecord make_record(const std::filesystem::path& path) {
    FileRecord record;
    record.path = path.string();
    record.sha256 = sha256_file(path);
    record.bytes = static_cast<std::uint64_t>(std::filesystem::file_size(path));
    return record;
}

}  // namespace

std::string sha256_bytes(const void* data, std::size_t size) {
    EvpContext ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned length = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), data, size) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1)
        throw std::runtime_error("sha256 digest computation failed");
    return hex_digest(digest, length);
}

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) throw std::runtime_error("cannot read " + path.string() + " for digest");
    EvpContext ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest computation failed");
    std::vector<char> buffer(1 << 16);
    while (stream) {
        stream.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const std::streamsize got = stream.gcount();
        if (got > 0 &&
            EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(got)) != 1)
            throw std::runtime_error("sha256 digest computation failed");
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned length = 0;
    if (EVP_DigestFinal_ex(ctx.get(), digest, &length) != 1)
        throw std::runtime_error("sha256 digest computation failed");
    return hex_digest(digest, length);
}

void RunManifest::add_input(const std::filesystem::path& path) {
    inputs.push_back(make_record(path));
}

void RunManifest::add_output(const std::filesystem::path& path) {
    outputs.push_back(make_record(path));
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["command"] = manifest.command;
    j["arguments"] = manifest.arguments;
    if (!manifest.config_sha256.empty()) j["config_sha256"] = manifest.config_sha256;
    auto records = [](const std::vector<FileRecord>& files) {
        nlohmann::json list = nlohmann::json::array();
        for (const FileRecord& f : files)
            list.push_back({{"path", f.path}, {"sha256", f.sha256}, {"bytes", f.bytes}});
        return list;
    };
    j["inputs"] = records(manifest.inputs);
    j["outputs"] = records(manifest.outputs);
    j["wall_ms"] = manifest.wall_ms;
    j["counters"] = manifest.counters;

    std::ofstream stream(path, std::ios::trunc);
    if (!stream) throw std::runtime_error("cannot open " + path.string() + " for writing");
    stream << j.dump(2) << "\n";
    if (!stream) throw std::runtime_error("write to " + path.string() + " failed");
}

}  // namespace apwt
