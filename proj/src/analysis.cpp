#include "cvtnet/analysis.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace cvtnet {

double similarity_dimension(std::uint64_t pieces, double scale)
{
    if (pieces < 1)
        throw std::invalid_argument("similarity_dimension: pieces must be at least 1");
    if (!(scale > 0.0 && scale < 1.0))
        throw std::invalid_argument("similarity_dimension: scale must lie in (0, 1)");
    return std::log(static_cast<double>(pieces)) / std::log(1.0 / scale);
}

std::uint64_t box_count(const ZeroMask& mask, unsigned box_size)
{
    if (box_size == 0 || !std::has_single_bit(box_size) || box_size > mask.order ||
        mask.order % box_size != 0)
        throw std::invalid_argument(
            "box_count: box size must be a power of two dividing the mask order");

    std::uint64_t occupied = 0;
    const unsigned blocks = mask.order / box_size;
    for (unsigned by = 0; by < blocks; ++by)
        for (unsigned bx = 0; bx < blocks; ++bx) {
            bool hit = false;
            for (unsigned y = by * box_size; y < (by + 1) * box_size && !hit; ++y)
                for (unsigned x = bx * box_size; x < (bx + 1) * box_size && !hit; ++x)
                    hit = mask.at(x, y);
            if (hit)
                ++occupied;
        }
    return occupied;
}

DimensionEstimate estimate_dimension(const ZeroMask& mask)
{
    if (mask.order < 4 || !std::has_single_bit(mask.order))
        throw std::invalid_argument(
            "estimate_dimension: mask order must be a power of two of at least 4");
    if (mask.true_count() == 0)
        throw std::domain_error("estimate_dimension: mask has no occupied cells");

    DimensionEstimate est;
    for (unsigned size = 1; size < mask.order; size *= 2)
        est.points.emplace_back(size, box_count(mask, size));

    // Least-squares fit of log(count) against log(order / size). A non-empty
    // mask occupies at least one box at every scale, so the logs are finite.
    const std::size_t n = est.points.size();
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [size, count] : est.points) {
        mean_x += std::log(static_cast<double>(mask.order) / size);
        mean_y += std::log(static_cast<double>(count));
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0;
    for (const auto& [size, count] : est.points) {
        const double dx = std::log(static_cast<double>(mask.order) / size) - mean_x;
        const double dy = std::log(static_cast<double>(count)) - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    est.slope = sxy / sxx;

    const double intercept = mean_y - est.slope * mean_x;
    est.residual = 0.0;
    for (const auto& [size, count] : est.points) {
        const double x = std::log(static_cast<double>(mask.order) / size);
        const double y = std::log(static_cast<double>(count));
        est.residual = std::max(est.residual, std::abs(y - (intercept + est.slope * x)));
    }
    return est;
}

} // namespace cvtnet
