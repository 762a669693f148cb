#pragma once

#include <string_view>

namespace optapprox {

inline constexpr std::string_view kArtifactVersion = "1.0.0";

}  // namespace optapprox
