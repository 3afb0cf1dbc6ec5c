#pragma once

namespace twotype {

inline constexpr const char* kToolVersion = "0.1.0";

} // namespace twotype
