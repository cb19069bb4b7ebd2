#pragma once

#include <string_view>

namespace xxring {

inline constexpr std::string_view kToolName = "xxring";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace xxring
