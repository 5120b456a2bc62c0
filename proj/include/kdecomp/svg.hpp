#pragma once

#include <iosfwd>
#include <string_view>

#include "kdecomp/dataset.hpp"

namespace kdecomp {

// Emits a deterministic scatter plot of two dataset columns as SVG text:
// axes span [-1, 1], one circle per row in row order, all coordinates
// computed in integer math so reruns are byte-identical.
void write_scatter_svg(std::ostream& out, const TupleDataset& points, std::size_t col_x,
                       std::size_t col_y, std::string_view label_x, std::string_view label_y);

}  // namespace kdecomp
