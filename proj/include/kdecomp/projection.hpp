#pragma once

#include <cstddef>
#include <vector>

#include "kdecomp/dataset.hpp"

namespace kdecomp {

// Which columns a projection removes. Indices are 1-based, kept sorted and
// distinct. Multi-column drops express composed single-column projections in
// one step; an empty drop set is the identity.
class ProjectionSpec {
  public:
    ProjectionSpec() = default;
    // Throws ArgumentError on duplicate or zero indices.
    explicit ProjectionSpec(std::vector<std::size_t> dropped_cols);

    static ProjectionSpec drop(std::size_t col) { return ProjectionSpec({col}); }

    const std::vector<std::size_t>& dropped_cols() const { return dropped_cols_; }

    // Throws BoundsError when an index exceeds n_cols and ArgumentError when
    // the spec would drop every column.
    void validate_against(std::size_t n_cols) const;

    friend bool operator==(const ProjectionSpec&, const ProjectionSpec&) = default;

  private:
    std::vector<std::size_t> dropped_cols_;  // sorted ascending
};

// Removes the specified columns from every row, preserving row order.
TupleDataset project(const TupleDataset& dataset, const ProjectionSpec& spec);

// The n single-column drops [drop{1}, drop{2}, ..., drop{n}], in index
// order. Throws ArgumentError for n < 2 (nothing to decompose).
std::vector<ProjectionSpec> canonical_family(std::size_t n_cols);

}  // namespace kdecomp
