#pragma once

namespace aho {

inline constexpr const char* kVersion = "1.0.0";

} // namespace aho
