#pragma once

namespace homvol {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace homvol
