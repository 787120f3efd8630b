#pragma once

namespace cfaudit {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace cfaudit
