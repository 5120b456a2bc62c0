#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kdecomp/dataset.hpp"

namespace kdecomp {

// Canonical self-delimiting serialization of a dataset: an 8-byte big-endian
// body length followed by the body text. The body renders every row as
// `(v1,v2,...,vn)`, joins rows with `,` and wraps the whole dataset in
// `(`...`)`, one byte per character. Equal datasets always produce identical
// blobs.
struct EncodedBlob {
    static constexpr std::size_t kHeaderSize = 8;

    std::string payload;         // header + body
    std::uint64_t declared_len;  // total payload length in bytes

    std::string_view body() const {
        return std::string_view(payload).substr(kHeaderSize);
    }
    // The length stored in the 8-byte header.
    std::uint64_t body_len() const;
};

EncodedBlob encode(const TupleDataset& dataset);

// Self-delimits an arbitrary byte string with the same 8-byte header.
EncodedBlob encode_bytes(std::string_view raw);

// Reassembles a blob from raw payload bytes, validating the header.
// Throws ParseError when the declared body length does not match.
EncodedBlob blob_from_payload(std::string payload);

// Inverse of encode, used to check the round-trip property. An empty body
// `()` carries no arity information, so the expected arity for that case is
// taken from n_cols_if_empty. Throws ParseError on malformed bodies.
TupleDataset decode(const EncodedBlob& blob, std::size_t n_cols_if_empty = 1);

}  // namespace kdecomp
