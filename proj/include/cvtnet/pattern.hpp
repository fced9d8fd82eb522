#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cvtnet/transform.hpp"

namespace cvtnet {

// Grids above this order are refused; the analysis and rotation machinery
// never needs more than width 12.
inline constexpr unsigned kMaxGridOrder = 4096;

// Square matrix of lscvt values at one level. Row-major with
// cell (column x, row y) = lscvt(x, y, level).value.
struct PatternGrid {
    std::uint64_t level = 0;
    unsigned width = 1; // level_width(level)
    unsigned order = 1; // side length
    std::uint8_t rule_number = 0;
    std::vector<std::uint64_t> cells;

    std::uint64_t at(unsigned x, unsigned y) const
    {
        return cells[static_cast<std::size_t>(y) * order + x];
    }
};

// Boolean mask of the zero cells of a grid (the active ports of the
// rotation scheme).
struct ZeroMask {
    unsigned order = 1;
    std::vector<std::uint8_t> bits; // row-major, 1 where the cell is 0

    bool at(unsigned x, unsigned y) const
    {
        return bits[static_cast<std::size_t>(y) * order + x] != 0;
    }

    std::size_t true_count() const;
};

// Side length 2^level_width(level) at which the level's pattern appears at
// full resolution instead of tiled.
std::uint64_t natural_order(std::uint64_t level);

// Evaluates lscvt over all (x, y) in [0, order)^2.
// Throws std::invalid_argument for order 0 and std::length_error above
// kMaxGridOrder.
PatternGrid generate_grid(std::uint64_t level, unsigned order, const BooleanRule& rule);

ZeroMask zero_mask(const PatternGrid& grid);

enum class RenderFormat { ascii, pbm };

// ascii: one text row per grid row, '#' for a zero cell, '.' otherwise.
// pbm: "P1\n<order> <order>\n" then order lines of order space-separated
// digits, '1' for a zero cell.
std::string render(const ZeroMask& mask, RenderFormat format);

// Decimal cell values, space-separated, one grid row per line.
std::string render_values(const PatternGrid& grid);

} // namespace cvtnet
