#pragma once

#include <string>

namespace pdm::io {

/// 17-significant-digit decimal rendering (round-trip exact for doubles).
std::string g17(double value);

}  // namespace pdm::io
