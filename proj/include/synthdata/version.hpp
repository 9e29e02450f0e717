#pragma once

namespace synthdata {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace synthdata
