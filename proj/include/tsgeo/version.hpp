#pragma once

namespace tsgeo {
inline constexpr const char* kVersion = "0.1.0";
}
