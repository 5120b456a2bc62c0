#include "kdecomp/backend.hpp"

#include <zlib.h>

#include <map>
#include <stdexcept>

#include "kdecomp/error.hpp"

namespace kdecomp {

namespace {

// Deflate parameters pinned per backend. Outputs must stay byte-stable run
// to run, so nothing here may depend on ambient state.
struct DeflateParams {
    int window_bits;
    int mem_level;
    int strategy;
};

struct Registered {
    BackendInfo info;
    DeflateParams params;
};

std::string deflate_bytes(std::string_view in, int level, const DeflateParams& p) {
    z_stream zs{};
    if (deflateInit2(&zs, level, Z_DEFLATED, p.window_bits, p.mem_level, p.strategy) != Z_OK) {
        throw Error("deflateInit2 failed");
    }
    std::string out;
    out.resize(deflateBound(&zs, static_cast<uLong>(in.size())));
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = reinterpret_cast<Bytef*>(out.data());
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = deflate(&zs, Z_FINISH);
    if (rc != Z_STREAM_END) {
        deflateEnd(&zs);
        throw Error("deflate did not finish (rc=" + std::to_string(rc) + ")");
    }
    out.resize(zs.total_out);
    deflateEnd(&zs);
    return out;
}

std::string inflate_bytes(std::string_view in) {
    z_stream zs{};
    if (inflateInit2(&zs, 15) != Z_OK) {
        throw Error("inflateInit2 failed");
    }
    std::string out;
    out.resize(in.size() * 4 + 64);
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(in.data()));
    zs.avail_in = static_cast<uInt>(in.size());
    std::size_t written = 0;
    int rc;
    do {
        if (written == out.size()) out.resize(out.size() * 2);
        zs.next_out = reinterpret_cast<Bytef*>(out.data() + written);
        zs.avail_out = static_cast<uInt>(out.size() - written);
        rc = inflate(&zs, Z_NO_FLUSH);
        if (rc != Z_OK && rc != Z_STREAM_END && rc != Z_BUF_ERROR) {
            inflateEnd(&zs);
            throw Error("inflate failed (rc=" + std::to_string(rc) + ")");
        }
        written = zs.total_out;
    } while (rc != Z_STREAM_END);
    out.resize(written);
    inflateEnd(&zs);
    return out;
}

// The default backend uses a 2 KiB deflate window. On the decimal-text
// blobs this library produces, the full 32 KiB window spends most of its
// time walking hash chains for matches that barely help (digit streams are
// near-incompressible at the LZ level), while 2 KiB keeps the row-to-row
// redundancy of structured datasets in reach and compresses several times
// faster. The "huffman" backend disables string matching entirely and
// serves as an independent second estimator.
const std::map<std::string, Registered>& registry() {
    static const std::map<std::string, Registered> instance = [] {
        std::map<std::string, Registered> reg;
        auto add = [&reg](std::string id, std::string description, DeflateParams params) {
            Registered r;
            r.params = params;
            r.info.id = id;
            r.info.description = std::move(description);
            r.info.min_level = 1;
            r.info.max_level = 9;
            r.info.default_level = 9;
            r.info.header_overhead =
                deflate_bytes(std::string_view{}, r.info.default_level, params).size();
            reg.emplace(std::move(id), std::move(r));
        };
        add("zlib", "deflate stream, 2 KiB window", {11, 8, Z_DEFAULT_STRATEGY});
        add("huffman", "deflate stream, Huffman coding only, no string matching",
            {15, 8, Z_HUFFMAN_ONLY});
        return reg;
    }();
    return instance;
}

const Registered& lookup(const CompressorBackend& backend) {
    auto it = registry().find(backend.id);
    if (it == registry().end()) {
        throw RegistryError("unknown compressor backend '" + backend.id + "'");
    }
    const Registered& r = it->second;
    if (backend.level < r.info.min_level || backend.level > r.info.max_level) {
        throw RegistryError("backend '" + backend.id + "' supports levels " +
                            std::to_string(r.info.min_level) + ".." +
                            std::to_string(r.info.max_level) + ", got " +
                            std::to_string(backend.level));
    }
    return r;
}

}  // namespace

const std::vector<std::string>& backend_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, _] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

const BackendInfo& backend_info(const std::string& id) {
    auto it = registry().find(id);
    if (it == registry().end()) {
        throw RegistryError("unknown compressor backend '" + id + "'");
    }
    return it->second.info;
}

CompressorBackend default_backend() {
    return CompressorBackend{"zlib", backend_info("zlib").default_level};
}

CompressorBackend make_backend(const std::string& id, int level) {
    const BackendInfo& info = backend_info(id);
    CompressorBackend backend{id, level < 0 ? info.default_level : level};
    lookup(backend);  // validates the level
    return backend;
}

std::string compress(std::string_view bytes, const CompressorBackend& backend) {
    const Registered& r = lookup(backend);
    std::string out = deflate_bytes(bytes, backend.level, r.params);
    // A small match window cannot back a stored-block fallback inside
    // deflate itself, so incompressible input would expand past the
    // stored-block bound. Emitting the cheaper of the compressed and the
    // stored stream keeps k_hat <= raw + h0 + 5 * ceil(raw / 65535) for
    // every input. Both are plain zlib streams.
    if (out.size() >= bytes.size()) {
        std::string stored = deflate_bytes(bytes, 0, r.params);
        if (stored.size() < out.size()) return stored;
    }
    return out;
}

std::string decompress(std::string_view bytes, const CompressorBackend& backend) {
    lookup(backend);  // both backends emit zlib streams
    return inflate_bytes(bytes);
}

std::uint64_t expansion_bound(std::uint64_t raw_len, const CompressorBackend& backend) {
    const Registered& r = lookup(backend);
    return raw_len + r.info.header_overhead + ((raw_len + 65534) / 65535) * 5;
}

}  // namespace kdecomp
