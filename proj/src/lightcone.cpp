#include "kdecomp/lightcone.hpp"

#include <random>

#include "kdecomp/error.hpp"
#include "kdecomp/parallel.hpp"
#include "kdecomp/projection.hpp"

namespace kdecomp {

std::string_view to_string(RegionTag tag) {
    switch (tag) {
        case RegionTag::full: return "full";
        case RegionTag::inside: return "inside";
        case RegionTag::on: return "on";
        case RegionTag::outside: return "outside";
    }
    return "?";
}

RegionTag region_tag_from_string(std::string_view name) {
    if (name == "full") return RegionTag::full;
    if (name == "inside") return RegionTag::inside;
    if (name == "on") return RegionTag::on;
    if (name == "outside") return RegionTag::outside;
    throw ParseError("unknown region '" + std::string(name) +
                     "' (expected full, inside, on or outside)");
}

ProbeCloud generate_cloud(std::size_t m, std::uint64_t seed) {
    if (m == 0) {
        throw ArgumentError("a probe cloud needs at least one point");
    }
    ProbeCloud cloud;
    cloud.seed = seed;
    cloud.points.reserve(m);

    std::mt19937_64 rng(seed);
    // (rng() >> 11) * 2^-53 is uniform on [0,1) and, unlike
    // std::uniform_real_distribution, produces the same sequence on every
    // standard library.
    auto draw = [&rng]() {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        return QuantizedScalar::from_double(2.0 * u - 1.0);
    };

    std::array<QuantizedScalar, 4> row;
    for (std::size_t i = 0; i < m; ++i) {
        for (auto& coord : row) coord = draw();
        cloud.points.append_row(row);
    }
    return cloud;
}

RegionTag classify(std::span<const QuantizedScalar> point, QuantizedScalar epsilon) {
    // q = x^2 + y^2 + z^2 - t^2 in micro^2 units; the band half-width is
    // scaled to the same units, so every comparison is exact.
    using Wide = __int128;
    Wide q = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        Wide v = point[i].micros();
        q += v * v;
    }
    Wide t = point[3].micros();
    q -= t * t;

    Wide band = static_cast<Wide>(epsilon.micros()) * QuantizedScalar::kScale;
    if (q < -band) return RegionTag::inside;
    if (q > band) return RegionTag::outside;
    return RegionTag::on;
}

TupleDataset region_subset(const ProbeCloud& cloud, const CausalRegion& region) {
    if (region.tag == RegionTag::full) {
        return cloud.points;
    }
    TupleDataset subset(4);
    for (std::size_t i = 0; i < cloud.points.m_rows(); ++i) {
        auto row = cloud.points.row(i);
        if (classify(row, region.epsilon) == region.tag) {
            subset.append_row(row);
        }
    }
    return subset;
}

std::vector<std::size_t> subset_dropped_columns(std::string_view subset) {
    constexpr std::string_view coords = "xyzt";
    std::array<bool, 4> keep{};
    for (char c : subset) {
        auto pos = coords.find(c);
        if (pos == std::string_view::npos) {
            throw ParseError("unknown coordinate subset '" + std::string(subset) + "'");
        }
        keep[pos] = true;
    }
    std::vector<std::size_t> dropped;
    for (std::size_t i = 0; i < 4; ++i) {
        if (!keep[i]) dropped.push_back(i + 1);
    }
    return dropped;
}

const ComplexityEstimate& LightconeReport::subset(std::string_view name) const {
    for (const auto& [subset_name, estimate] : complexity_by_subset) {
        if (subset_name == name) return estimate;
    }
    throw ParseError("report has no subset '" + std::string(name) + "'");
}

LightconeReport study(const ProbeCloud& cloud, const CausalRegion& region,
                      const CompressorBackend& backend) {
    TupleDataset points = region_subset(cloud, region);
    if (points.empty()) {
        throw EmptyRegionError("region '" + std::string(to_string(region.tag)) +
                               "' selected no points");
    }

    LightconeReport report;
    report.region = region;
    report.m_region = points.m_rows();
    report.backend_id = backend.id;
    report.seed = cloud.seed;

    auto estimates = parallel_map(kCoordinateSubsets.size(), [&](std::size_t i) {
        ProjectionSpec spec(subset_dropped_columns(kCoordinateSubsets[i]));
        return estimate(spec.dropped_cols().empty() ? points : project(points, spec), backend);
    });
    for (std::size_t i = 0; i < kCoordinateSubsets.size(); ++i) {
        report.complexity_by_subset.emplace_back(std::string(kCoordinateSubsets[i]),
                                                 estimates[i]);
    }
    return report;
}

namespace {

FilterOutcome run_filter(const ProbeCloud& cloud, QuantizedScalar epsilon,
                         std::uint64_t threshold, const CompressorBackend& backend,
                         bool high_pass) {
    if (threshold == 0) {
        throw ArgumentError("filter threshold must be positive");
    }
    if (epsilon.micros() < 0) {
        throw ArgumentError("epsilon must be non-negative");
    }

    std::vector<RegionTag> tags{RegionTag::full, RegionTag::inside, RegionTag::outside};
    if (epsilon.micros() > 0) {
        tags.insert(tags.begin() + 2, RegionTag::on);
    }

    FilterOutcome outcome;
    outcome.high_pass = high_pass;
    outcome.threshold = threshold;
    for (RegionTag tag : tags) {
        LightconeReport report = study(cloud, CausalRegion{tag, epsilon}, backend);
        std::uint64_t k = report.subset("xyzt").k_hat;
        bool passes = high_pass ? k >= threshold : k < threshold;
        if (passes) outcome.passed.push_back(tag);
        outcome.reports.push_back(std::move(report));
    }
    return outcome;
}

}  // namespace

FilterOutcome lowpass_filter(const ProbeCloud& cloud, QuantizedScalar epsilon,
                             std::uint64_t threshold, const CompressorBackend& backend) {
    return run_filter(cloud, epsilon, threshold, backend, /*high_pass=*/false);
}

FilterOutcome highpass_filter(const ProbeCloud& cloud, QuantizedScalar epsilon,
                              std::uint64_t threshold, const CompressorBackend& backend) {
    return run_filter(cloud, epsilon, threshold, backend, /*high_pass=*/true);
}

}  // namespace kdecomp
