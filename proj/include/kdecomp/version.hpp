#pragma once

namespace kdecomp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kdecomp
