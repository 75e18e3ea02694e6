#pragma once

namespace gpl {

inline constexpr const char* kVersion = "0.1.0";

} // namespace gpl
