#pragma once

namespace iqls {

inline constexpr const char* kLibraryVersion = "0.1.0";

}  // namespace iqls
