#pragma once

namespace moufang {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace moufang
