#pragma once

#include <string_view>

namespace bootperc {

inline constexpr std::string_view kToolVersion = "0.1.0";

}  // namespace bootperc
