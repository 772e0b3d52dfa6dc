#pragma once

namespace crackecon {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace crackecon
