#pragma once

namespace mzv {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace mzv
