#pragma once

#include <cstdint>

#include "cvtnet/rule.hpp"

namespace cvtnet {

// A non-negative value carried together with the bit width it was computed
// at. Well-formed words satisfy 1 <= width <= 64 and value < 2^width.
struct BitWord {
    std::uint64_t value = 0;
    unsigned width = 1;

    unsigned bit(unsigned i) const { return static_cast<unsigned>((value >> i) & 1u); }

    bool well_formed() const
    {
        return width >= 1 && width <= 64 && (width == 64 || (value >> width) == 0);
    }

    bool operator==(const BitWord&) const = default;
};

using LsCvtResult = BitWord;

// Carry word of a ripple addition: bitwise AND shifted left one position.
// Satisfies cvt(a,b) + (a XOR b) = a + b.
// Throws std::overflow_error when the shift would drop the top bit.
std::uint64_t cvt(std::uint64_t a, std::uint64_t b);

// Bit width shared by every level in the band [2^n, 2^(n+1)), namely n+1.
// Level 0 is treated like level 1 and gets width 1.
unsigned level_width(std::uint64_t level);

// Applies `rule` bitwise across the low level_width(level) bits of x, y and
// level, with x and y contributing only their low bits. Bit i of the result
// is rule(x_i, y_i, level_i).
LsCvtResult lscvt(std::uint64_t x, std::uint64_t y, std::uint64_t level, const BooleanRule& rule);

} // namespace cvtnet
