#pragma once

namespace xxchain {

inline constexpr const char* kVersion = "0.1.0";

// Name of the deterministic generator behind every random draw; recorded in
// run manifests so results can be reproduced elsewhere.
inline constexpr const char* kPrngName = "splitmix64";

}  // namespace xxchain
