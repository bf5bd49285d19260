#include "homtype/log_real.hpp"

#include <cstdio>

namespace homtype {

std::string LogReal::str() const {
  if (sign_ == 0) return "0";
  if (is_positive_infinity()) return "inf";
  char buf[48];
  if (lg_ > -kMaxFiniteLn && lg_ < kMaxFiniteLn) {
    std::snprintf(buf, sizeof buf, "%.17g", value());
  } else {
    std::snprintf(buf, sizeof buf, "%s2^(%.10g)", sign_ < 0 ? "-" : "",
                  log2_abs());
  }
  return buf;
}

} // namespace homtype
