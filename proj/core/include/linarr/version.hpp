#pragma once

namespace linarr {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace linarr
