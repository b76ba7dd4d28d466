#pragma once

namespace csineq {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace csineq
