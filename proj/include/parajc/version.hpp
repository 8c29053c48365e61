#pragma once

namespace parajc {

inline constexpr const char* library_version = "parajc 0.1.0";

} // namespace parajc
