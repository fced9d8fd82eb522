#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cvtnet/pattern.hpp"

namespace cvtnet {

// Result of a log-log box-counting fit. points holds (box_size, box_count)
// in ascending box size; residual is the max absolute deviation of the
// log-points from the fitted line, so exactly self-similar masks report ~0.
struct DimensionEstimate {
    double slope = 0.0;
    std::vector<std::pair<unsigned, std::uint64_t>> points;
    double residual = 0.0;
};

// D = log(pieces) / log(1/scale) for a self-similar set of `pieces` copies
// at scale factor `scale`. Throws std::invalid_argument for pieces < 1 or
// scale outside (0, 1).
double similarity_dimension(std::uint64_t pieces, double scale);

// Number of box_size x box_size axis-aligned blocks containing at least one
// true cell. box_size must be a power of two dividing the mask order.
std::uint64_t box_count(const ZeroMask& mask, unsigned box_size);

// Least-squares slope of log(box_count) against log(order/box_size) over
// box sizes 1, 2, 4, ..., order/2. Requires a power-of-two order >= 4
// (std::invalid_argument) and a non-empty mask (std::domain_error).
DimensionEstimate estimate_dimension(const ZeroMask& mask);

} // namespace cvtnet
