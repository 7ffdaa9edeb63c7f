#pragma once

namespace irrs {
inline constexpr const char* kVersion = "0.1.0";
}
