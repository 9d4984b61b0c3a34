#pragma once

namespace qpc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qpc
