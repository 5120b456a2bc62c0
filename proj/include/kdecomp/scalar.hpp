#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace kdecomp {

// Fixed-point decimal with exactly six fractional digits, stored as a count
// of micro-units. The representable range is [-1e9, +1e9]. Values
// round-trip exactly through their textual form, and rendering is injective,
// which keeps encoded datasets deterministic byte for byte.
class QuantizedScalar {
  public:
    static constexpr std::int64_t kScale = 1'000'000;
    static constexpr std::int64_t kMaxMicros = std::int64_t{1'000'000'000} * kScale;

    constexpr QuantizedScalar() = default;  // zero

    // Throws RangeError when |micros| exceeds the representable range.
    static QuantizedScalar from_micros(std::int64_t micros);

    // Nearest-micro rounding. Throws RangeError for non-finite or
    // out-of-range inputs.
    static QuantizedScalar from_double(double value);

    // Accepts an optional sign, integer digits and up to six fractional
    // digits ("1", "-0.5", "3.141592"). More than six fractional digits
    // would be lossy and is rejected. Throws ParseError / RangeError.
    static QuantizedScalar parse(std::string_view text);

    std::int64_t micros() const { return micros_; }
    double to_double() const { return static_cast<double>(micros_) / kScale; }

    // Canonical text: optional '-', integer part without leading zeros,
    // '.', six fractional digits. E.g. -0.500000, 3.000000.
    std::string render() const;
    void render_to(std::string& out) const;

    friend auto operator<=>(const QuantizedScalar&, const QuantizedScalar&) = default;

  private:
    constexpr explicit QuantizedScalar(std::int64_t micros) : micros_(micros) {}

    std::int64_t micros_ = 0;
};

}  // namespace kdecomp
