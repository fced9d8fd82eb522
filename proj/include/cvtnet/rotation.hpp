#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "cvtnet/pattern.hpp"

namespace cvtnet {

// Quadrant label: one bit of x and the matching bit of y.
struct Quadrant {
    std::uint8_t x_bit = 0;
    std::uint8_t y_bit = 0;

    bool operator==(const Quadrant&) const = default;
};

// The fixed role cycle: the standby quadrant walks (0,0) -> (0,1) -> (1,1)
// -> (1,0) and wraps.
inline constexpr std::array<Quadrant, 4> kQuadrantCycle{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};

// Full-period brute force stays cheap up to here (65,536 ports, 65,536 ticks).
inline constexpr unsigned kMaxScheduleWidth = 8;

// Hierarchical quadrant-role rotation over a 2^width x 2^width port grid.
// The grid is split into quadrants recursively, depth 0 being the whole
// pattern. The standby role at depth d steps through quadrant_cycle once
// every 4^(width-1-d) ticks, so each depth runs 4x faster than the one
// above it and one period of 4^width ticks returns everything to phase 0.
// base_speed_label is the symbolic clock x of the depth-0 rotation; it is
// carried for reporting only and never drives the simulation.
struct RotationSchedule {
    unsigned width = 1;
    std::array<Quadrant, 4> quadrant_cycle = kQuadrantCycle;
    std::uint64_t period = 4; // 4^width
    double base_speed_label = 1.0;
};

// Throws std::invalid_argument outside width [1, kMaxScheduleWidth].
RotationSchedule build_schedule(unsigned width, double base_speed_label);

// Rotation speed of the depth-d pattern: 4^depth * base_speed_label.
// Throws std::invalid_argument for depth >= width.
double depth_speed(const RotationSchedule& schedule, unsigned depth);

// Rotation phase per depth for a tick, most significant (depth 0) first:
// the base-4 digits of tick modulo the period.
std::vector<unsigned> phase_digits(const RotationSchedule& schedule, std::uint64_t tick);

// Which ports rest at one tick. A cell is standby iff at some depth d its
// quadrant path hits the cycle position selected by that depth's phase, so
// exactly 4^width - 3^width cells are standby at every tick.
struct PortAssignment {
    std::uint64_t tick = 0;
    unsigned order = 2; // 2^width
    std::vector<std::uint8_t> standby; // row-major, 1 = standby

    bool is_standby(unsigned x, unsigned y) const
    {
        return standby[static_cast<std::size_t>(y) * order + x] != 0;
    }

    std::size_t standby_count() const;
    std::vector<std::pair<unsigned, unsigned>> standby_cells() const; // (x, y)
    std::vector<std::pair<unsigned, unsigned>> active_cells() const;
};

// Tick is taken modulo the period.
PortAssignment standby_set(const RotationSchedule& schedule, std::uint64_t tick);

// Closed-form per-width saving: 3^w of 4^w ports serve at any instant.
struct EfficiencyReport {
    unsigned width = 1;
    std::uint64_t total_ports = 4;   // 4^w
    std::uint64_t active_ports = 3;  // 3^w
    std::uint64_t standby_ports = 1; // 4^w - 3^w
    double saving_percent = 25.0;    // 100 * standby / total, exact in binary
};

// Throws std::invalid_argument for width 0 and std::overflow_error when
// 4^width leaves the 64-bit range (width > 31).
EfficiencyReport efficiency(unsigned width);

// Per-cell standby tallies over a tick range starting at tick 0.
struct FairnessReport {
    unsigned width = 1;
    std::uint64_t ticks_run = 0;
    unsigned order = 2;
    std::vector<std::uint64_t> standby_counts; // row-major
    double min_fraction = 0.0; // min over cells of count / ticks_run
    double max_fraction = 0.0;

    std::uint64_t count_at(unsigned x, unsigned y) const
    {
        return standby_counts[static_cast<std::size_t>(y) * order + x];
    }
};

// Accumulates standby_set over ticks [0, ticks). Deterministic; large runs
// are split across threads and merged. Throws std::invalid_argument for
// ticks 0.
FairnessReport simulate(const RotationSchedule& schedule, std::uint64_t ticks);

} // namespace cvtnet
