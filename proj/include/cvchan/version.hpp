#pragma once

namespace cvchan {

inline constexpr const char* kToolName = "cvchan";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace cvchan
