#pragma once

namespace skyrm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace skyrm
