#pragma once

namespace chatelet {

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr const char* kNormTag = "sup";

}  // namespace chatelet
