#include "kdecomp/estimator.hpp"

#include <bit>

namespace kdecomp {

ComplexityEstimate estimate_blob(const EncodedBlob& blob, const CompressorBackend& backend) {
    ComplexityEstimate e;
    e.k_hat = compress(blob.payload, backend).size();
    e.raw_len = blob.payload.size();
    e.backend_id = backend.id;
    return e;
}

ComplexityEstimate estimate(const TupleDataset& dataset, const CompressorBackend& backend) {
    return estimate_blob(encode(dataset), backend);
}

ComplexityEstimate estimate_bytes(std::string_view raw, const CompressorBackend& backend) {
    return estimate_blob(encode_bytes(raw), backend);
}

ComplexityEstimate estimate_joint(const TupleDataset& a, const TupleDataset& b,
                                  const CompressorBackend& backend) {
    EncodedBlob joint;
    joint.payload = encode(a).payload;
    joint.payload += encode(b).payload;
    joint.declared_len = joint.payload.size();
    ComplexityEstimate e;
    e.k_hat = compress(joint.payload, backend).size();
    e.raw_len = joint.payload.size();
    e.backend_id = backend.id;
    return e;
}

std::uint64_t log_slack(std::uint64_t raw_len) {
    // ceil(log2(x)) == bit_width(x - 1) for x > 1
    std::uint64_t log_term = raw_len > 1 ? std::bit_width(raw_len - 1) : 0;
    return 64 + log_term;
}

}  // namespace kdecomp
