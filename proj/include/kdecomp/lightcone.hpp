#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kdecomp/backend.hpp"
#include "kdecomp/dataset.hpp"
#include "kdecomp/estimator.hpp"

namespace kdecomp {

// A seeded point cloud in the spacetime hypercube [-1,1]^4 with columns
// (x, y, z, t). Generation order is storage order and part of the cloud's
// identity.
struct ProbeCloud {
    TupleDataset points{4};
    std::uint64_t seed = 0;

    std::size_t m() const { return points.m_rows(); }
};

enum class RegionTag { full, inside, on, outside };

std::string_view to_string(RegionTag tag);
RegionTag region_tag_from_string(std::string_view name);  // throws ParseError

// A causal region of the cloud. epsilon is the half-width of the "on the
// cone" band; with epsilon = 0 the band is exact equality, which uniform
// sampling almost never hits, so inside/outside partition the cloud.
struct CausalRegion {
    RegionTag tag = RegionTag::full;
    QuantizedScalar epsilon;  // >= 0
};

// Draws m points coordinate-wise uniform on [-1, 1], quantized to the fixed
// decimal grid. Same (m, seed) always yields the identical cloud. Throws
// ArgumentError when m == 0.
ProbeCloud generate_cloud(std::size_t m, std::uint64_t seed);

// Classifies one (x, y, z, t) point against the cone x^2+y^2+z^2 = t^2
// (c = 1). The quadratic form is evaluated in exact integer arithmetic on
// the fixed-point grid, so boundary assignment never suffers float noise.
RegionTag classify(std::span<const QuantizedScalar> point, QuantizedScalar epsilon);

// Rows of the cloud whose classification matches the region, in original
// order. `full` returns every point.
TupleDataset region_subset(const ProbeCloud& cloud, const CausalRegion& region);

// The eleven coordinate subsets studied per region: the full tuple, all
// four 3-coordinate projections and all six 2-coordinate projections.
// Subsets are named by the coordinates they retain.
inline constexpr std::array<std::string_view, 11> kCoordinateSubsets = {
    "xyzt", "xyz", "xyt", "xzt", "yzt", "xy", "xz", "xt", "yz", "yt", "zt"};

// Column drops (1-based) realizing a named subset; throws ParseError for
// unknown names.
std::vector<std::size_t> subset_dropped_columns(std::string_view subset);

struct LightconeReport {
    CausalRegion region;
    std::size_t m_region = 0;
    // Ordered as kCoordinateSubsets.
    std::vector<std::pair<std::string, ComplexityEstimate>> complexity_by_subset;
    std::string backend_id;
    std::uint64_t seed = 0;

    const ComplexityEstimate& subset(std::string_view name) const;
};

// Estimates the region subset and all ten proper coordinate projections.
// Throws EmptyRegionError (naming the region) when no points match.
LightconeReport study(const ProbeCloud& cloud, const CausalRegion& region,
                      const CompressorBackend& backend = default_backend());

// Complexity filter over the causal regions (full, inside, outside, plus
// "on" when epsilon > 0). A region passes the low-pass filter when the
// complexity of its xyzt subset is strictly below the threshold, and the
// high-pass filter when it is at or above, so the two filters partition the
// regions at any shared threshold.
struct FilterOutcome {
    bool high_pass = false;
    std::uint64_t threshold = 0;
    std::vector<RegionTag> passed;
    std::vector<LightconeReport> reports;  // one per evaluated region
};

FilterOutcome lowpass_filter(const ProbeCloud& cloud, QuantizedScalar epsilon,
                             std::uint64_t threshold,
                             const CompressorBackend& backend = default_backend());

FilterOutcome highpass_filter(const ProbeCloud& cloud, QuantizedScalar epsilon,
                              std::uint64_t threshold,
                              const CompressorBackend& backend = default_backend());

}  // namespace kdecomp
