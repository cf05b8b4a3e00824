#pragma once

namespace lddeval {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kToolName = "lddeval";

}  // namespace lddeval
