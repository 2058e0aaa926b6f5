#pragma once

namespace nlqsl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace nlqsl
