#include "cvtnet/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace cvtnet {

std::size_t ZeroMask::true_count() const
{
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

std::uint64_t natural_order(std::uint64_t level)
{
    const unsigned w = level_width(level);
    if (w >= 64)
        throw std::overflow_error("natural_order: 2^width exceeds the 64-bit range");
    return std::uint64_t{1} << w;
}

PatternGrid generate_grid(std::uint64_t level, unsigned order, const BooleanRule& rule)
{
    if (order < 1)
        throw std::invalid_argument("generate_grid: order must be at least 1");
    if (order > kMaxGridOrder)
        throw std::length_error("generate_grid: order exceeds the cap of 4096");

    PatternGrid grid;
    grid.level = level;
    grid.width = level_width(level);
    grid.order = order;
    grid.rule_number = rule.number;
    grid.cells.resize(static_cast<std::size_t>(order) * order);
    for (unsigned y = 0; y < order; ++y)
        for (unsigned x = 0; x < order; ++x)
            grid.cells[static_cast<std::size_t>(y) * order + x] = lscvt(x, y, level, rule).value;
    return grid;
}

ZeroMask zero_mask(const PatternGrid& grid)
{
    ZeroMask mask;
    mask.order = grid.order;
    mask.bits.resize(grid.cells.size());
    for (std::size_t i = 0; i < grid.cells.size(); ++i)
        mask.bits[i] = grid.cells[i] == 0 ? 1 : 0;
    return mask;
}

std::string render(const ZeroMask& mask, RenderFormat format)
{
    std::string out;
    if (format == RenderFormat::pbm) {
        out += "P1\n";
        out += std::to_string(mask.order);
        out += ' ';
        out += std::to_string(mask.order);
        out += '\n';
    }
    for (unsigned y = 0; y < mask.order; ++y) {
        for (unsigned x = 0; x < mask.order; ++x) {
            if (format == RenderFormat::ascii) {
                out += mask.at(x, y) ? '#' : '.';
            } else {
                if (x != 0)
                    out += ' ';
                out += mask.at(x, y) ? '1' : '0';
            }
        }
        out += '\n';
    }
    return out;
}

std::string render_values(const PatternGrid& grid)
{
    std::string out;
    for (unsigned y = 0; y < grid.order; ++y) {
        for (unsigned x = 0; x < grid.order; ++x) {
            if (x != 0)
                out += ' ';
            out += std::to_string(grid.at(x, y));
        }
        out += '\n';
    }
    return out;
}

} // namespace cvtnet
