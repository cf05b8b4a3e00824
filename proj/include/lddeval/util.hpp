#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace lddeval {

/// Split on runs of ASCII whitespace; no empty tokens.
std::vector<std::string> split_ws(std::string_view line);

/// Split on a single separator character; keeps empty fields.
std::vector<std::string> split_char(std::string_view line, char sep);

/// Read a whole file into memory. Throws Error with the path on failure.
std::string read_file(const std::filesystem::path& path);

/// Read a file as lines (LF or CRLF, both stripped).
std::vector<std::string> read_lines(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit content digest, hex-encoded. Used to fingerprint run inputs.
std::string fnv1a64_hex(std::string_view bytes);

/// Deterministic RNG with a portable output sequence (mt19937_64) and
/// bias-free bounded draws. Substreams are derived as seed XOR stream index
/// so per-corpus sampling is independent of scheduling order.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng substream(std::uint64_t seed, std::uint64_t index) { return Rng(seed ^ index); }

    std::uint64_t next() { return engine_(); }

    /// Uniform draw in [0, n); n must be positive. Rejection sampling, no
    /// modulo bias, identical across platforms.
    std::uint64_t bounded(std::uint64_t n);

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[bounded(i)]);
        }
    }

    static constexpr const char* name() { return "mt19937_64"; }

private:
    std::mt19937_64 engine_;
};

}  // namespace lddeval
