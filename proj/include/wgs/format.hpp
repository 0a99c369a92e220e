#pragma once

#include <charconv>
#include <string>

namespace wgs {

// shortest decimal form that round-trips to the same double
inline std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace wgs
