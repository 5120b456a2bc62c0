#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"

namespace kdecomp {

// The reproducibility envelope of one command invocation. A manifest fully
// determines every numeric output: re-running with an identical manifest
// reproduces every byte of every report. No timestamps, no environment.
struct RunManifest {
    std::string command;
    nlohmann::ordered_json parameters;  // flat key -> value map
    std::string version;
    std::string input_hash;  // fnv1a-64 of the encoded input payload
};

nlohmann::ordered_json to_json(const RunManifest& manifest);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hash_hex(std::string_view bytes);

}  // namespace kdecomp
