#pragma once

namespace minsph {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace minsph
