#pragma once

namespace dsrg {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace dsrg
