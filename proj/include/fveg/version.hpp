#pragma once

namespace fveg {

inline constexpr const char* version_string = "fveg 0.1.0";

} // namespace fveg
