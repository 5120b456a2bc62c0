#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "kdecomp/backend.hpp"
#include "kdecomp/dataset.hpp"
#include "kdecomp/estimator.hpp"
#include "kdecomp/projection.hpp"

namespace kdecomp {

// Parameters of a decomposition check. Coefficients default to all ones
// when left empty. The program bound M caps the complexity of the
// projection routines themselves; it is unknowable for real code, so the
// upper inequality is only checked when a caller supplies a value.
struct DecompositionConfig {
    std::vector<double> coefficients;         // one per column; empty = all 1
    std::optional<double> program_bound;      // M, bytes
    double slack_c1 = 8.0;                    // multiplies log2(m)
    double slack_c2 = 64.0;                   // constant term, bytes
};

struct ProjectionEstimate {
    ProjectionSpec spec;
    ComplexityEstimate estimate;
    double coefficient = 1.0;
};

struct DecompositionReport {
    std::size_t n = 0;  // columns
    std::size_t m = 0;  // rows
    ComplexityEstimate k_full;
    std::vector<ProjectionEstimate> per_projection;
    double weighted_sum = 0.0;  // sum of a_i * k_hat(pi_i(d))
    double lhs = 0.0;           // (n - 1) * k_full
    double ratio = 0.0;         // weighted_sum / k_full
    bool lower_ok = false;
    std::optional<bool> upper_ok;  // empty when no program bound was given
    double slack_used = 0.0;       // c1 * log2(m) + c2
    std::string backend_id;
};

// Estimates the dataset and all canonical projections, then checks
//   (n-1) * K(d)  <=  sum a_i * K(pi_i(d)) + slack          (lower)
//   sum a_i * K(pi_i(d))  <=  n * (K(d) + M) * sup(a) + slack  (upper, if M)
// The per-projection estimates run in parallel. Throws ArgumentError on
// zero coefficients or a coefficient-count mismatch.
DecompositionReport verify_decomposition(const TupleDataset& dataset,
                                         const DecompositionConfig& config,
                                         const CompressorBackend& backend = default_backend());

// One row of the convergence probe: the residuals of the two candidate
// normalizations of the weighted sum against K(d) at a given n.
struct ConvergenceSample {
    std::size_t n = 0;
    double residual_over_n_minus_1 = 0.0;  // |K(d) - sum a_i/(n-1) K_i|
    double residual_over_n = 0.0;          // |K(d) - sum a_i/n K_i|
};

// Runs the decomposition at each n in the schedule and reports both
// residuals for trend inspection. Report-only: whether either residual
// converges is an open question, so no verdict is attached. The schedule
// must be strictly increasing with every entry >= 2.
std::vector<ConvergenceSample> convergence_probe(
    const std::function<TupleDataset(std::size_t)>& make_dataset,
    const std::vector<std::size_t>& n_schedule, const DecompositionConfig& config,
    const CompressorBackend& backend = default_backend());

}  // namespace kdecomp
