#pragma once

namespace alpharm {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace alpharm
