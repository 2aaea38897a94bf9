#pragma once

namespace levyopt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace levyopt
