#include "kdecomp/dataset.hpp"

#include <string>

#include "kdecomp/error.hpp"

namespace kdecomp {

TupleDataset::TupleDataset(std::size_t n_cols) : n_cols_(n_cols) {
    if (n_cols == 0) {
        throw ArgumentError("a dataset needs at least one column");
    }
}

TupleDataset TupleDataset::from_rows(std::size_t n_cols,
                                     const std::vector<std::vector<QuantizedScalar>>& rows) {
    TupleDataset d(n_cols);
    d.reserve(rows.size());
    for (const auto& row : rows) {
        d.append_row(row);
    }
    return d;
}

TupleDataset TupleDataset::from_doubles(
    std::initializer_list<std::initializer_list<double>> rows) {
    if (rows.size() == 0) {
        throw ArgumentError("from_doubles needs at least one row to fix the arity");
    }
    TupleDataset d(rows.begin()->size());
    std::vector<QuantizedScalar> converted;
    for (const auto& row : rows) {
        converted.clear();
        for (double v : row) converted.push_back(QuantizedScalar::from_double(v));
        d.append_row(converted);
    }
    return d;
}

void TupleDataset::append_row(std::span<const QuantizedScalar> row) {
    if (row.size() != n_cols_) {
        throw ArgumentError("row has " + std::to_string(row.size()) + " entries, dataset expects " +
                            std::to_string(n_cols_));
    }
    cells_.insert(cells_.end(), row.begin(), row.end());
}

const QuantizedScalar& TupleDataset::at(std::size_t row, std::size_t col) const {
    if (col >= n_cols_ || row >= m_rows()) {
        throw BoundsError("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                          ") outside dataset of " + std::to_string(m_rows()) + "x" +
                          std::to_string(n_cols_));
    }
    return cells_[row * n_cols_ + col];
}

}  // namespace kdecomp
