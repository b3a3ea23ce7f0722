#pragma once

namespace aperylab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace aperylab
