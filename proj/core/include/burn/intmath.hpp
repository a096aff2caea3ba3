#pragma once

#include <bit>
#include <cstdint>

namespace burn {

/// Floor of the square root, exact over the full 64-bit range.
constexpr uint64_t isqrt_u64(uint64_t x) {
    if (x == 0) return 0;
    // Newton iteration from a power-of-two overestimate; no floating point.
    uint64_t r = uint64_t{1} << ((64 - std::countl_zero(x) + 1) / 2);
    while (true) {
        uint64_t next = (r + x / r) / 2;
        if (next >= r) break;
        r = next;
    }
    return r;
}

/// Ceiling of the square root, exact.
constexpr uint64_t ceil_sqrt_u64(uint64_t x) {
    uint64_t r = isqrt_u64(x);
    return r * r == x ? r : r + 1;
}

} // namespace burn
