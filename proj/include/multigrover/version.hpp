#pragma once

namespace multigrover {

inline constexpr const char* kVersion = "1.0.0";

} // namespace multigrover
