#pragma once

#include <bit>
#include <cstdint>

namespace nearhex {

// Point-set currencies. Bit k of a Mask15 is GQ(2,2) point k;
// bit p of a Mask45 is near-hexagon point p (p = 15*layer + gq).
using Mask15 = std::uint16_t;
using Mask45 = std::uint64_t;

inline constexpr Mask15 kFull15 = 0x7fff;
inline constexpr Mask45 kFull45 = (Mask45{1} << 45) - 1;

inline int popcount(Mask45 m) { return std::popcount(m); }
inline bool has_bit(Mask45 m, int i) { return (m >> i) & 1; }

}  // namespace nearhex
