#pragma once

namespace arcvote {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace arcvote
