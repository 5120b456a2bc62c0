#include "kdecomp/generate.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "kdecomp/error.hpp"

namespace kdecomp {

namespace {

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

const QuantizedScalar kZero = QuantizedScalar::from_micros(0);
const QuantizedScalar kOne = QuantizedScalar::from_micros(QuantizedScalar::kScale);

TupleDataset bits_dataset(std::size_t count, const std::function<bool(std::size_t)>& bit) {
    if (count == 0) {
        throw ArgumentError("bit dataset needs at least one row");
    }
    TupleDataset d(1);
    d.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        QuantizedScalar v = bit(i) ? kOne : kZero;
        d.append_row({&v, 1});
    }
    return d;
}

}  // namespace

TupleDataset constant_bits(std::size_t count) {
    return bits_dataset(count, [](std::size_t) { return true; });
}

TupleDataset alternating_bits(std::size_t count) {
    // 0,1,0,1,... : bit i is set when the 1-based position is even
    return bits_dataset(count, [](std::size_t i) { return (i + 1) % 2 == 0; });
}

TupleDataset random_bits(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return bits_dataset(count, [&rng](std::size_t) { return (rng() >> 63) != 0; });
}

TupleDataset random_hypercube(std::size_t n_cols, std::size_t m_rows, std::uint64_t seed) {
    if (n_cols == 0 || m_rows == 0) {
        throw ArgumentError("hypercube needs n >= 1 and m >= 1");
    }
    std::mt19937_64 rng(seed);
    TupleDataset d(n_cols);
    d.reserve(m_rows);
    std::vector<QuantizedScalar> row(n_cols);
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (auto& v : row) v = QuantizedScalar::from_double(2.0 * uniform_unit(rng) - 1.0);
        d.append_row(row);
    }
    return d;
}

TupleDataset parametric_curve(std::size_t n_cols) {
    if (n_cols < 3) {
        throw ArgumentError("the parametric curve needs at least 3 columns");
    }
    TupleDataset d(n_cols);
    std::vector<QuantizedScalar> row(n_cols, kZero);
    for (int ia = 0; ia <= 200; ++ia) {
        double a = (ia - 100) / 100.0;
        for (int it = 0; it * 0.1 <= 2.0 * std::numbers::pi; ++it) {
            double t = it * 0.1;
            row[0] = QuantizedScalar::from_double(a * std::cos(t));
            row[1] = QuantizedScalar::from_double(a * a * std::sin(t));
            row[2] = QuantizedScalar::from_double(a);
            d.append_row(row);
        }
    }
    return d;
}

TupleDataset random_dataset_full_range(std::size_t n_cols, std::size_t m_rows,
                                       std::uint64_t seed) {
    if (n_cols == 0) {
        throw ArgumentError("dataset needs at least one column");
    }
    std::mt19937_64 rng(seed);
    TupleDataset d(n_cols);
    d.reserve(m_rows);
    std::vector<QuantizedScalar> row(n_cols);
    const auto range = static_cast<std::uint64_t>(QuantizedScalar::kMaxMicros) * 2 + 1;
    for (std::size_t i = 0; i < m_rows; ++i) {
        for (auto& v : row) {
            auto micros = static_cast<std::int64_t>(rng() % range) - QuantizedScalar::kMaxMicros;
            v = QuantizedScalar::from_micros(micros);
        }
        d.append_row(row);
    }
    return d;
}

std::string random_bytes(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::string bytes;
    bytes.reserve(count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < count; ++i) {
        if (i % 8 == 0) word = rng();
        bytes.push_back(static_cast<char>(word & 0xff));
        word >>= 8;
    }
    return bytes;
}

namespace {

std::uint64_t parse_count(std::string_view text) {
    auto parse_u64 = [](std::string_view s) -> std::uint64_t {
        if (s.empty()) throw ParseError("missing number in generator spec");
        std::uint64_t value = 0;
        for (char c : s) {
            if (c < '0' || c > '9') {
                throw ParseError("bad number '" + std::string(s) + "' in generator spec");
            }
            value = value * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return value;
    };
    if (auto caret = text.find('^'); caret != std::string_view::npos) {
        std::uint64_t base = parse_u64(text.substr(0, caret));
        std::uint64_t exponent = parse_u64(text.substr(caret + 1));
        if (base != 2 || exponent > 40) {
            throw ParseError("only powers 2^k with k <= 40 are supported, got '" +
                             std::string(text) + "'");
        }
        return std::uint64_t{1} << exponent;
    }
    return parse_u64(text);
}

std::map<std::string, std::uint64_t> parse_kv(std::string_view args) {
    std::map<std::string, std::uint64_t> kv;
    while (!args.empty()) {
        auto comma = args.find(',');
        std::string_view item = args.substr(0, comma);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected key=value in generator spec, got '" + std::string(item) +
                             "'");
        }
        kv[std::string(item.substr(0, eq))] = parse_count(item.substr(eq + 1));
        if (comma == std::string_view::npos) break;
        args.remove_prefix(comma + 1);
    }
    return kv;
}

std::uint64_t require(const std::map<std::string, std::uint64_t>& kv, const std::string& key,
                      std::string_view spec) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        throw ParseError("generator spec '" + std::string(spec) + "' is missing " + key + "=");
    }
    return it->second;
}

}  // namespace

TupleDataset generate_from_spec(std::string_view spec, std::uint64_t seed) {
    auto colon = spec.find(':');
    std::string_view name = spec.substr(0, colon);
    std::string_view args = colon == std::string_view::npos ? std::string_view{}
                                                            : spec.substr(colon + 1);
    if (name == "constant") return constant_bits(parse_count(args));
    if (name == "alternating") return alternating_bits(parse_count(args));
    if (name == "random") return random_bits(parse_count(args), seed);
    if (name == "hypercube") {
        auto kv = parse_kv(args);
        return random_hypercube(require(kv, "n", spec), require(kv, "m", spec), seed);
    }
    if (name == "curve") {
        auto kv = parse_kv(args);
        return parametric_curve(require(kv, "n", spec));
    }
    throw ParseError("unknown generator '" + std::string(name) +
                     "' (expected constant, alternating, random, hypercube or curve)");
}

}  // namespace kdecomp
