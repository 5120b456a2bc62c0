#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kdecomp/backend.hpp"
#include "kdecomp/codec.hpp"
#include "kdecomp/dataset.hpp"

namespace kdecomp {

// The compression approximation of Kolmogorov complexity: the compressed
// size of the self-delimited blob, together with the blob's raw size and
// the backend that produced it. All sizes are in bytes.
struct ComplexityEstimate {
    std::uint64_t k_hat = 0;
    std::uint64_t raw_len = 0;
    std::string backend_id;

    // k_hat per raw byte; separates structural compressibility from sheer
    // dataset size.
    double density() const {
        return raw_len == 0 ? 0.0 : static_cast<double>(k_hat) / static_cast<double>(raw_len);
    }

    friend bool operator==(const ComplexityEstimate&, const ComplexityEstimate&) = default;
};

ComplexityEstimate estimate(const TupleDataset& dataset,
                            const CompressorBackend& backend = default_backend());

ComplexityEstimate estimate_bytes(std::string_view raw,
                                  const CompressorBackend& backend = default_backend());

ComplexityEstimate estimate_blob(const EncodedBlob& blob,
                                 const CompressorBackend& backend = default_backend());

// Joint complexity of two datasets: the estimate of their concatenated
// self-delimited blobs. The two length headers are what tells the parts
// apart.
ComplexityEstimate estimate_joint(const TupleDataset& a, const TupleDataset& b,
                                  const CompressorBackend& backend = default_backend());

// Slack allowance for the additive terms the theory hides in O(log) / O(1):
// 64 + ceil(log2(raw_len)) bytes.
std::uint64_t log_slack(std::uint64_t raw_len);

}  // namespace kdecomp
