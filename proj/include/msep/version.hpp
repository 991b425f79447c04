#pragma once

namespace msep {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace msep
