#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace skyrm {

// Shortest representation that round-trips the double exactly ('.' separator).
inline std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

}  // namespace skyrm
