#include "pdm/io/format.hpp"

#include <cstdio>

namespace pdm::io {

std::string g17(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

}  // namespace pdm::io
