#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace kdecomp {

// Identifies a registered lossless compressor. For a fixed (id, level) pair
// compression is deterministic: the same input bytes always produce the same
// output bytes, across processes and platforms.
struct CompressorBackend {
    std::string id = "zlib";
    int level = 9;
};

struct BackendInfo {
    std::string id;
    std::string description;
    int min_level;
    int max_level;
    int default_level;
    // Compressed size of an empty input; the fixed container cost h0.
    std::uint64_t header_overhead;
};

// Registered ids in registration order. The registry is populated once at
// startup and read-only afterwards.
const std::vector<std::string>& backend_ids();

// Throws RegistryError for unknown ids.
const BackendInfo& backend_info(const std::string& id);

CompressorBackend default_backend();

// Resolves an id plus optional level (<0 means "backend default") to a
// validated backend. Throws RegistryError on unknown ids or bad levels.
CompressorBackend make_backend(const std::string& id, int level = -1);

// Lossless compression of arbitrary bytes. decompress(compress(b)) == b for
// every byte string b. Throws RegistryError on unknown backends.
std::string compress(std::string_view bytes, const CompressorBackend& backend);
std::string decompress(std::string_view bytes, const CompressorBackend& backend);

// Worst-case compressed size for raw_len input bytes:
// raw_len + h0 + ceil(raw_len / 65535) * 5 (stored-block expansion).
std::uint64_t expansion_bound(std::uint64_t raw_len, const CompressorBackend& backend);

}  // namespace kdecomp
