#include "kdecomp/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "kdecomp/error.hpp"
#include "kdecomp/parallel.hpp"

namespace kdecomp {

namespace {

std::vector<double> resolve_coefficients(const DecompositionConfig& config, std::size_t n) {
    std::vector<double> coeffs = config.coefficients;
    if (coeffs.empty()) {
        coeffs.assign(n, 1.0);
    } else if (coeffs.size() != n) {
        throw ArgumentError("got " + std::to_string(coeffs.size()) + " coefficients for " +
                            std::to_string(n) + " columns");
    }
    for (double a : coeffs) {
        if (a == 0.0) {
            throw ArgumentError("decomposition coefficients must be non-zero");
        }
    }
    return coeffs;
}

}  // namespace

DecompositionReport verify_decomposition(const TupleDataset& dataset,
                                         const DecompositionConfig& config,
                                         const CompressorBackend& backend) {
    const std::size_t n = dataset.n_cols();
    if (n < 2) {
        throw ArgumentError("decomposition needs at least 2 columns, got " + std::to_string(n));
    }
    std::vector<double> coeffs = resolve_coefficients(config, n);

    DecompositionReport report;
    report.n = n;
    report.m = dataset.m_rows();
    report.backend_id = backend.id;
    report.k_full = estimate(dataset, backend);

    auto family = canonical_family(n);
    auto estimates = parallel_map(n, [&](std::size_t i) {
        return estimate(project(dataset, family[i]), backend);
    });

    report.per_projection.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.per_projection.push_back({family[i], estimates[i], coeffs[i]});
        report.weighted_sum += coeffs[i] * static_cast<double>(estimates[i].k_hat);
    }

    const double k_full = static_cast<double>(report.k_full.k_hat);
    report.lhs = static_cast<double>(n - 1) * k_full;
    report.ratio = report.weighted_sum / k_full;
    report.slack_used =
        config.slack_c1 * (report.m > 0 ? std::log2(static_cast<double>(report.m)) : 0.0) +
        config.slack_c2;
    report.lower_ok = report.weighted_sum + report.slack_used >= report.lhs;
    if (config.program_bound) {
        double sup = *std::max_element(coeffs.begin(), coeffs.end());
        report.upper_ok = report.weighted_sum <=
                          static_cast<double>(n) * (k_full + *config.program_bound) * sup +
                              report.slack_used;
    }
    return report;
}

std::vector<ConvergenceSample> convergence_probe(
    const std::function<TupleDataset(std::size_t)>& make_dataset,
    const std::vector<std::size_t>& n_schedule, const DecompositionConfig& config,
    const CompressorBackend& backend) {
    for (std::size_t i = 0; i < n_schedule.size(); ++i) {
        if (n_schedule[i] < 2) {
            throw ArgumentError("convergence schedule entries must be >= 2");
        }
        if (i > 0 && n_schedule[i] <= n_schedule[i - 1]) {
            throw ArgumentError("convergence schedule must be strictly increasing");
        }
    }

    std::vector<ConvergenceSample> samples;
    samples.reserve(n_schedule.size());
    for (std::size_t n : n_schedule) {
        TupleDataset dataset = make_dataset(n);
        if (dataset.n_cols() != n) {
            throw ArgumentError("dataset generator returned " +
                                std::to_string(dataset.n_cols()) + " columns, expected " +
                                std::to_string(n));
        }
        DecompositionReport report = verify_decomposition(dataset, config, backend);
        double k_full = static_cast<double>(report.k_full.k_hat);
        ConvergenceSample s;
        s.n = n;
        s.residual_over_n_minus_1 =
            std::abs(k_full - report.weighted_sum / static_cast<double>(n - 1));
        s.residual_over_n = std::abs(k_full - report.weighted_sum / static_cast<double>(n));
        samples.push_back(s);
    }
    return samples;
}

}  // namespace kdecomp
