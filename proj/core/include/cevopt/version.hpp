#pragma once

namespace cevopt {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace cevopt
