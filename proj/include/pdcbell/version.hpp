#pragma once

namespace pdcbell {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pdcbell
