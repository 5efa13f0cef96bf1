#include "hsos/types.hpp"

#include <charconv>
#include <cmath>

namespace hsos {

std::string format_double(double x) {
  if (x == 0.0) return "0";  // normalize -0
  if (std::nearbyint(x) == x && std::abs(x) < 1e15) {
    // Integral values print without a trailing ".0" so that small integer
    // coefficients round-trip as written ("2", not "2.0").
    return std::to_string(static_cast<long long>(x));
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;  // shortest round-trip never overflows 64 chars
  return std::string(buf, ptr);
}

}  // namespace hsos
