#pragma once

namespace bsc {
inline constexpr const char* kVersion = "0.1.0";
}
