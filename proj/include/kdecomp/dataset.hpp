#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "kdecomp/scalar.hpp"

namespace kdecomp {

// An ordered m x n matrix of quantized scalars. Rows are tuples; row order
// is part of the dataset's identity (two datasets holding the same rows in
// a different order are different datasets).
class TupleDataset {
  public:
    // Creates an empty dataset with a fixed arity. Throws ArgumentError when
    // n_cols is zero.
    explicit TupleDataset(std::size_t n_cols);

    static TupleDataset from_rows(std::size_t n_cols,
                                  const std::vector<std::vector<QuantizedScalar>>& rows);

    // Convenience for literals in tests: arity taken from the first row.
    static TupleDataset from_doubles(std::initializer_list<std::initializer_list<double>> rows);

    void reserve(std::size_t rows) { cells_.reserve(rows * n_cols_); }

    // Throws ArgumentError unless the row has exactly n_cols entries.
    void append_row(std::span<const QuantizedScalar> row);

    std::size_t n_cols() const { return n_cols_; }
    std::size_t m_rows() const { return n_cols_ == 0 ? 0 : cells_.size() / n_cols_; }
    bool empty() const { return cells_.empty(); }

    std::span<const QuantizedScalar> row(std::size_t i) const {
        return {cells_.data() + i * n_cols_, n_cols_};
    }
    const QuantizedScalar& at(std::size_t row, std::size_t col) const;

    friend bool operator==(const TupleDataset&, const TupleDataset&) = default;

  private:
    std::size_t n_cols_;
    std::vector<QuantizedScalar> cells_;  // row-major
};

}  // namespace kdecomp
