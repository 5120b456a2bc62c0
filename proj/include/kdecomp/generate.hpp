#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "kdecomp/dataset.hpp"

namespace kdecomp {

// Seeded dataset generators. Everything here is deterministic: the same
// arguments always produce the identical dataset on every platform.

// Single-column datasets of bits, the classic compression staircase.
TupleDataset constant_bits(std::size_t count);                       // all ones
TupleDataset alternating_bits(std::size_t count);                    // 0,1,0,1,...
TupleDataset random_bits(std::size_t count, std::uint64_t seed);

// m points coordinate-wise uniform on [-1, 1] in an n-dimensional cube.
TupleDataset random_hypercube(std::size_t n_cols, std::size_t m_rows, std::uint64_t seed);

// Points on the parametric curve (a cos t, a^2 sin t, a, 0, ..., 0) swept
// over a in [-1, 1] step 0.01 and t in [0, 2*pi] step 0.1; a structured
// dataset whose complexity sits far below a random cloud of equal arity.
// Needs n_cols >= 3.
TupleDataset parametric_curve(std::size_t n_cols);

// Uniform scalars over the full representable range; exercises the codec
// far from the unit cube.
TupleDataset random_dataset_full_range(std::size_t n_cols, std::size_t m_rows,
                                       std::uint64_t seed);

// Seeded incompressible bytes (for raw byte-string estimates in tests).
std::string random_bytes(std::size_t count, std::uint64_t seed);

// Parses generator specs used by the command line:
//   constant:2^20  alternating:4096  random:2^20
//   hypercube:n=100,m=3000           curve:n=100
// Counts accept either plain integers or 2^k. Throws ParseError.
TupleDataset generate_from_spec(std::string_view spec, std::uint64_t seed);

}  // namespace kdecomp
