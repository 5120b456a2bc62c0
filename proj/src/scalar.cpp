#include "kdecomp/scalar.hpp"

#include <cmath>
#include <cstdio>

#include "kdecomp/error.hpp"

namespace kdecomp {

QuantizedScalar QuantizedScalar::from_micros(std::int64_t micros) {
    if (micros < -kMaxMicros || micros > kMaxMicros) {
        throw RangeError("value " + std::to_string(micros) +
                         "e-6 outside representable range [-1e9, 1e9]");
    }
    return QuantizedScalar(micros);
}

QuantizedScalar QuantizedScalar::from_double(double value) {
    if (!std::isfinite(value)) {
        throw RangeError("non-finite value cannot be quantized");
    }
    double scaled = value * static_cast<double>(kScale);
    if (scaled < -static_cast<double>(kMaxMicros) - 0.5 ||
        scaled > static_cast<double>(kMaxMicros) + 0.5) {
        throw RangeError("value " + std::to_string(value) +
                         " outside representable range [-1e9, 1e9]");
    }
    return from_micros(std::llround(scaled));
}

QuantizedScalar QuantizedScalar::parse(std::string_view text) {
    const std::string_view original = text;
    auto fail = [&](const char* why) -> QuantizedScalar {
        throw ParseError("cannot parse scalar '" + std::string(original) + "': " + why);
    };

    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    if (text.empty()) return fail("no digits");

    std::int64_t int_part = 0;
    std::size_t i = 0;
    for (; i < text.size() && text[i] != '.'; ++i) {
        if (text[i] < '0' || text[i] > '9') return fail("unexpected character");
        int_part = int_part * 10 + (text[i] - '0');
        if (int_part > kMaxMicros / kScale) return fail("integer part too large");
    }
    if (i == 0) return fail("missing integer digits");

    std::int64_t frac_micros = 0;
    if (i < text.size()) {  // text[i] == '.'
        ++i;
        std::size_t frac_digits = 0;
        for (; i < text.size(); ++i, ++frac_digits) {
            if (text[i] < '0' || text[i] > '9') return fail("unexpected character");
            if (frac_digits >= 6) return fail("more than six fractional digits");
            frac_micros = frac_micros * 10 + (text[i] - '0');
        }
        if (frac_digits == 0) return fail("missing fractional digits after '.'");
        while (frac_digits < 6) {
            frac_micros *= 10;
            ++frac_digits;
        }
    }

    std::int64_t micros = int_part * kScale + frac_micros;
    return from_micros(negative ? -micros : micros);
}

void QuantizedScalar::render_to(std::string& out) const {
    std::int64_t m = micros_;
    if (m < 0) {
        out.push_back('-');
        m = -m;
    }
    char buf[32];
    int len = std::snprintf(buf, sizeof buf, "%lld.%06lld",
                            static_cast<long long>(m / kScale),
                            static_cast<long long>(m % kScale));
    out.append(buf, static_cast<std::size_t>(len));
}

std::string QuantizedScalar::render() const {
    std::string out;
    render_to(out);
    return out;
}

}  // namespace kdecomp
