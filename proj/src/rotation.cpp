#include "cvtnet/rotation.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace cvtnet {

namespace {

std::uint64_t pow3(unsigned n)
{
    std::uint64_t v = 1;
    while (n--)
        v *= 3;
    return v;
}

// Phases of tick t (already reduced modulo the period), depth 0 first.
// Depth d advances once every 4^(width-1-d) ticks, so the phases are the
// base-4 digits of t with the deepest depth in the least significant place.
void phases_of(unsigned width, std::uint64_t t, unsigned* phases)
{
    for (unsigned d = 0; d < width; ++d)
        phases[d] = static_cast<unsigned>((t >> (2 * (width - 1 - d))) & 3u);
}

bool cell_is_standby(unsigned width, const std::array<Quadrant, 4>& cycle,
                     const unsigned* phases, unsigned x, unsigned y)
{
    for (unsigned d = 0; d < width; ++d) {
        const Quadrant role = cycle[phases[d]];
        const unsigned shift = width - 1 - d;
        if (((x >> shift) & 1u) == role.x_bit && ((y >> shift) & 1u) == role.y_bit)
            return true;
    }
    return false;
}

// Walks the 3^width cells that dodge the standby role at every depth and
// bumps their counter. Complementing against the tick total afterwards is
// much cheaper than touching the ~90% standby cells directly at width 8.
void tally_active(const std::array<Quadrant, 4>& cycle, const unsigned* phases,
                  unsigned width, unsigned depth, unsigned x, unsigned y,
                  unsigned order, std::vector<std::uint64_t>& active_counts)
{
    if (depth == width) {
        active_counts[static_cast<std::size_t>(y) * order + x] += 1;
        return;
    }
    const Quadrant role = cycle[phases[depth]];
    for (unsigned qy = 0; qy < 2; ++qy)
        for (unsigned qx = 0; qx < 2; ++qx) {
            if (qx == role.x_bit && qy == role.y_bit)
                continue;
            tally_active(cycle, phases, width, depth + 1, (x << 1) | qx, (y << 1) | qy,
                         order, active_counts);
        }
}

void tally_range(const RotationSchedule& schedule, std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& active_counts)
{
    const unsigned order = 1u << schedule.width;
    unsigned phases[kMaxScheduleWidth];
    for (std::uint64_t t = begin; t < end; ++t) {
        phases_of(schedule.width, t % schedule.period, phases);
        tally_active(schedule.quadrant_cycle, phases, schedule.width, 0, 0, 0, order,
                     active_counts);
    }
}

} // namespace

RotationSchedule build_schedule(unsigned width, double base_speed_label)
{
    if (width < 1 || width > kMaxScheduleWidth)
        throw std::invalid_argument("build_schedule: width must be in [1, 8]");
    RotationSchedule schedule;
    schedule.width = width;
    schedule.quadrant_cycle = kQuadrantCycle;
    schedule.period = std::uint64_t{1} << (2 * width);
    schedule.base_speed_label = base_speed_label;
    return schedule;
}

double depth_speed(const RotationSchedule& schedule, unsigned depth)
{
    if (depth >= schedule.width)
        throw std::invalid_argument("depth_speed: depth must be below the schedule width");
    return static_cast<double>(std::uint64_t{1} << (2 * depth)) * schedule.base_speed_label;
}

std::vector<unsigned> phase_digits(const RotationSchedule& schedule, std::uint64_t tick)
{
    std::vector<unsigned> phases(schedule.width);
    phases_of(schedule.width, tick % schedule.period, phases.data());
    return phases;
}

std::size_t PortAssignment::standby_count() const
{
    return static_cast<std::size_t>(
        std::count(standby.begin(), standby.end(), std::uint8_t{1}));
}

std::vector<std::pair<unsigned, unsigned>> PortAssignment::standby_cells() const
{
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned y = 0; y < order; ++y)
        for (unsigned x = 0; x < order; ++x)
            if (is_standby(x, y))
                cells.emplace_back(x, y);
    return cells;
}

std::vector<std::pair<unsigned, unsigned>> PortAssignment::active_cells() const
{
    std::vector<std::pair<unsigned, unsigned>> cells;
    for (unsigned y = 0; y < order; ++y)
        for (unsigned x = 0; x < order; ++x)
            if (!is_standby(x, y))
                cells.emplace_back(x, y);
    return cells;
}

PortAssignment standby_set(const RotationSchedule& schedule, std::uint64_t tick)
{
    const unsigned order = 1u << schedule.width;
    unsigned phases[kMaxScheduleWidth];
    phases_of(schedule.width, tick % schedule.period, phases);

    PortAssignment assignment;
    assignment.tick = tick;
    assignment.order = order;
    assignment.standby.assign(static_cast<std::size_t>(order) * order, 0);
    for (unsigned y = 0; y < order; ++y)
        for (unsigned x = 0; x < order; ++x)
            if (cell_is_standby(schedule.width, schedule.quadrant_cycle, phases, x, y))
                assignment.standby[static_cast<std::size_t>(y) * order + x] = 1;
    return assignment;
}

EfficiencyReport efficiency(unsigned width)
{
    if (width < 1)
        throw std::invalid_argument("efficiency: width must be at least 1");
    if (width > 31)
        throw std::overflow_error("efficiency: 4^width exceeds the 64-bit range");

    EfficiencyReport report;
    report.width = width;
    report.total_ports = std::uint64_t{1} << (2 * width);
    report.active_ports = pow3(width);
    report.standby_ports = report.total_ports - report.active_ports;
    // total is a power of two, so this divides exactly in binary.
    report.saving_percent =
        100.0 * static_cast<double>(report.standby_ports) / static_cast<double>(report.total_ports);
    return report;
}

FairnessReport simulate(const RotationSchedule& schedule, std::uint64_t ticks)
{
    if (ticks < 1)
        throw std::invalid_argument("simulate: ticks must be at least 1");

    const unsigned order = 1u << schedule.width;
    const std::size_t cells = static_cast<std::size_t>(order) * order;
    std::vector<std::uint64_t> active_counts(cells, 0);

    // Ticks are independent, so long runs are split across threads and the
    // per-chunk tallies summed; the result is identical to a serial pass.
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::uint64_t chunk_count =
        (ticks >= 4096 && schedule.width >= 5) ? std::min<std::uint64_t>(hw, ticks) : 1;
    if (chunk_count <= 1) {
        tally_range(schedule, 0, ticks, active_counts);
    } else {
        std::vector<std::vector<std::uint64_t>> partials(
            chunk_count, std::vector<std::uint64_t>(cells, 0));
        std::vector<std::thread> workers;
        const std::uint64_t step = ticks / chunk_count;
        for (std::uint64_t c = 0; c < chunk_count; ++c) {
            const std::uint64_t begin = c * step;
            const std::uint64_t end = (c + 1 == chunk_count) ? ticks : begin + step;
            workers.emplace_back(
                [&, begin, end, c] { tally_range(schedule, begin, end, partials[c]); });
        }
        for (auto& w : workers)
            w.join();
        for (const auto& partial : partials)
            for (std::size_t i = 0; i < cells; ++i)
                active_counts[i] += partial[i];
    }

    FairnessReport report;
    report.width = schedule.width;
    report.ticks_run = ticks;
    report.order = order;
    report.standby_counts.resize(cells);
    for (std::size_t i = 0; i < cells; ++i)
        report.standby_counts[i] = ticks - active_counts[i];

    const auto [lo, hi] =
        std::minmax_element(report.standby_counts.begin(), report.standby_counts.end());
    report.min_fraction = static_cast<double>(*lo) / static_cast<double>(ticks);
    report.max_fraction = static_cast<double>(*hi) / static_cast<double>(ticks);
    return report;
}

} // namespace cvtnet
