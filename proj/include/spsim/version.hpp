#pragma once

namespace spsim {

inline constexpr const char* kVersion = "0.1.0";

} // namespace spsim
