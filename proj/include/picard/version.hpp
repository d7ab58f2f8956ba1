#pragma once

namespace picard {

inline constexpr const char* engine_version = "1.0.0";

}  // namespace picard
