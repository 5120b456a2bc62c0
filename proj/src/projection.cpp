#include "kdecomp/projection.hpp"

#include <algorithm>
#include <string>

#include "kdecomp/error.hpp"

namespace kdecomp {

ProjectionSpec::ProjectionSpec(std::vector<std::size_t> dropped_cols)
    : dropped_cols_(std::move(dropped_cols)) {
    std::sort(dropped_cols_.begin(), dropped_cols_.end());
    if (std::adjacent_find(dropped_cols_.begin(), dropped_cols_.end()) != dropped_cols_.end()) {
        throw ArgumentError("projection drops a column twice");
    }
    if (!dropped_cols_.empty() && dropped_cols_.front() == 0) {
        throw ArgumentError("column indices are 1-based; got 0");
    }
}

void ProjectionSpec::validate_against(std::size_t n_cols) const {
    for (std::size_t col : dropped_cols_) {
        if (col > n_cols) {
            throw BoundsError("projection drops column " + std::to_string(col) +
                              " of a dataset with " + std::to_string(n_cols) + " columns");
        }
    }
    if (dropped_cols_.size() >= n_cols) {
        throw ArgumentError("projection would drop all " + std::to_string(n_cols) + " columns");
    }
}

TupleDataset project(const TupleDataset& dataset, const ProjectionSpec& spec) {
    spec.validate_against(dataset.n_cols());

    std::vector<bool> dropped(dataset.n_cols() + 1, false);
    for (std::size_t col : spec.dropped_cols()) dropped[col] = true;

    TupleDataset out(dataset.n_cols() - spec.dropped_cols().size());
    out.reserve(dataset.m_rows());
    std::vector<QuantizedScalar> kept;
    kept.reserve(out.n_cols());
    for (std::size_t i = 0; i < dataset.m_rows(); ++i) {
        kept.clear();
        auto row = dataset.row(i);
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!dropped[j + 1]) kept.push_back(row[j]);
        }
        out.append_row(kept);
    }
    return out;
}

std::vector<ProjectionSpec> canonical_family(std::size_t n_cols) {
    if (n_cols < 2) {
        throw ArgumentError("the canonical projection family needs at least 2 columns, got " +
                            std::to_string(n_cols));
    }
    std::vector<ProjectionSpec> family;
    family.reserve(n_cols);
    for (std::size_t i = 1; i <= n_cols; ++i) {
        family.push_back(ProjectionSpec::drop(i));
    }
    return family;
}

}  // namespace kdecomp
