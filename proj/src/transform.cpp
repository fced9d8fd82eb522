#include "cvtnet/transform.hpp"

#include <bit>
#include <stdexcept>

namespace cvtnet {

std::uint64_t cvt(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t carries = a & b;
    if (carries >> 63)
        throw std::overflow_error("cvt: carry word does not fit in 64 bits");
    return carries << 1;
}

unsigned level_width(std::uint64_t level)
{
    const unsigned w = static_cast<unsigned>(std::bit_width(level));
    return w == 0 ? 1u : w;
}

LsCvtResult lscvt(std::uint64_t x, std::uint64_t y, std::uint64_t level, const BooleanRule& rule)
{
    const unsigned w = level_width(level);
    std::uint64_t out = 0;
    for (unsigned i = 0; i < w; ++i) {
        const unsigned xi = static_cast<unsigned>((x >> i) & 1u);
        const unsigned yi = static_cast<unsigned>((y >> i) & 1u);
        const unsigned zi = static_cast<unsigned>((level >> i) & 1u);
        out |= static_cast<std::uint64_t>(eval_rule(rule, xi, yi, zi)) << i;
    }
    return {out, w};
}

} // namespace cvtnet
