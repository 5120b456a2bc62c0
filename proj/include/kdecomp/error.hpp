#pragma once

#include <stdexcept>
#include <string>

namespace kdecomp {

// Base class for all library errors.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A value falls outside the representable fixed-point range.
class RangeError : public Error {
  public:
    using Error::Error;
};

// Malformed textual input (scalar, blob, CSV/JSON dataset, generator spec).
class ParseError : public Error {
  public:
    using Error::Error;
};

// Unknown compressor id or unsupported level.
class RegistryError : public Error {
  public:
    using Error::Error;
};

// A column or row index is out of range for the dataset at hand.
class BoundsError : public Error {
  public:
    using Error::Error;
};

// Structurally invalid operation arguments (dropping every column, zero
// coefficients, empty clouds, non-positive thresholds, ...).
class ArgumentError : public Error {
  public:
    using Error::Error;
};

// A causal region selected no points, so nothing can be estimated.
class EmptyRegionError : public Error {
  public:
    using Error::Error;
};

}  // namespace kdecomp
