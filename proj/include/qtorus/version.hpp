#pragma once

namespace qtorus {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qtorus
