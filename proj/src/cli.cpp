#include "cvtnet/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cvtnet/analysis.hpp"
#include "cvtnet/cdma.hpp"
#include "cvtnet/pattern.hpp"
#include "cvtnet/rotation.hpp"
#include "cvtnet/rule.hpp"
#include "cvtnet/transform.hpp"

namespace cvtnet::cli {

namespace {

// Every real number in report output is printed with 6 fixed decimals so
// identical invocations stay byte-identical.
std::string fixed6(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot open output file: " + out_path);
    file << text;
    if (!file)
        throw std::runtime_error("failed writing output file: " + out_path);
}

struct PatternArgs {
    std::uint64_t level = 0;
    unsigned rule = 3;
    std::string format = "ascii";
    std::string out_path;
    unsigned order = 0;
    bool order_given = false;
};

int run_pattern(const PatternArgs& args, std::ostream& out)
{
    const BooleanRule rule = rule_from_number(args.rule);
    std::uint64_t order = args.order;
    if (!args.order_given) {
        order = natural_order(args.level);
        if (order > kMaxGridOrder)
            throw std::length_error("pattern: natural order exceeds the grid cap of 4096");
    }
    if (order < 1)
        throw std::invalid_argument("pattern: order must be at least 1");
    if (order > kMaxGridOrder)
        throw std::length_error("pattern: order exceeds the grid cap of 4096");

    const PatternGrid grid = generate_grid(args.level, static_cast<unsigned>(order), rule);
    std::string text;
    if (args.format == "pgm-values")
        text = render_values(grid);
    else
        text = render(zero_mask(grid),
                      args.format == "pbm" ? RenderFormat::pbm : RenderFormat::ascii);
    emit(text, args.out_path, out);
    return 0;
}

int run_dimension(std::uint64_t level, unsigned rule_number, std::ostream& out)
{
    const BooleanRule rule = rule_from_number(rule_number);
    const std::uint64_t order = natural_order(level);
    if (order > kMaxGridOrder)
        throw std::length_error("dimension: natural order exceeds the grid cap of 4096");
    const ZeroMask mask =
        zero_mask(generate_grid(level, static_cast<unsigned>(order), rule));
    const DimensionEstimate est = estimate_dimension(mask);

    out << "{\"slope\":" << fixed6(est.slope) << ",\"points\":[";
    for (std::size_t i = 0; i < est.points.size(); ++i) {
        if (i != 0)
            out << ',';
        out << '[' << est.points[i].first << ',' << est.points[i].second << ']';
    }
    out << "],\"residual\":" << fixed6(est.residual) << "}\n";
    return 0;
}

int run_efficiency(unsigned max_width, const std::string& format, std::ostream& out)
{
    if (max_width < 1)
        throw std::invalid_argument("efficiency: max width must be at least 1");

    if (format == "json") {
        out << '[';
        for (unsigned w = 1; w <= max_width; ++w) {
            const EfficiencyReport r = efficiency(w);
            if (w != 1)
                out << ',';
            out << "{\"width\":" << r.width << ",\"total\":" << r.total_ports
                << ",\"active\":" << r.active_ports << ",\"standby\":" << r.standby_ports
                << ",\"saving_percent\":" << fixed6(r.saving_percent) << '}';
        }
        out << "]\n";
        return 0;
    }

    out << "width,total,active,standby,saving_percent\n";
    for (unsigned w = 1; w <= max_width; ++w) {
        const EfficiencyReport r = efficiency(w);
        out << r.width << ',' << r.total_ports << ',' << r.active_ports << ','
            << r.standby_ports << ',' << fixed6(r.saving_percent) << '\n';
    }
    return 0;
}

int run_simulate(unsigned width, std::optional<std::uint64_t> ticks,
                 const std::string& report_mode, std::ostream& out)
{
    const RotationSchedule schedule = build_schedule(width, 1.0);
    const FairnessReport report = simulate(schedule, ticks.value_or(schedule.period));

    out << "{\"width\":" << report.width << ",\"ticks_run\":" << report.ticks_run;
    if (report_mode != "summary") {
        out << ",\"counts\":[";
        for (unsigned y = 0; y < report.order; ++y) {
            if (y != 0)
                out << ',';
            out << '[';
            for (unsigned x = 0; x < report.order; ++x) {
                if (x != 0)
                    out << ',';
                out << report.count_at(x, y);
            }
            out << ']';
        }
        out << ']';
    }
    out << ",\"min_fraction\":" << fixed6(report.min_fraction)
        << ",\"max_fraction\":" << fixed6(report.max_fraction) << "}\n";
    return 0;
}

int run_cdma(unsigned k, const std::vector<std::int64_t>& data, std::ostream& out)
{
    const WalshCodeBook book = walsh_codes(k);
    const ChannelFrame frame = channel_encode(data, book);
    std::vector<std::int64_t> decoded(data.size());
    for (std::size_t i = 0; i < data.size(); ++i)
        decoded[i] = channel_decode(frame, book, static_cast<unsigned>(i));

    auto print_list = [&out](const std::vector<std::int64_t>& values) {
        out << '[';
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i != 0)
                out << ',';
            out << values[i];
        }
        out << ']';
    };
    out << "{\"k\":" << k << ",\"order\":" << book.order << ",\"data\":";
    print_list(data);
    out << ",\"frame\":";
    print_list(frame.samples);
    out << ",\"decoded\":";
    print_list(decoded);
    out << "}\n";
    return decoded == data ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Boolean-rule fractal grids, their dimension, and the fractal-placed "
                 "port-rotation scheme"};
    app.name("cvtnet");
    app.require_subcommand(1);

    PatternArgs pattern_args;
    auto* pattern_cmd =
        app.add_subcommand("pattern", "Render a grid's zero-cell fractal or its values");
    pattern_cmd->add_option("--level", pattern_args.level, "Level (z axis) of the grid")
        ->required();
    auto* order_opt = pattern_cmd->add_option(
        "--order", pattern_args.order, "Grid side length (default: natural order)");
    pattern_cmd->add_option("--rule", pattern_args.rule, "Boolean rule number")
        ->check(CLI::Range(0u, 255u))
        ->capture_default_str();
    pattern_cmd->add_option("--format", pattern_args.format, "Output format")
        ->check(CLI::IsMember({"ascii", "pbm", "pgm-values"}))
        ->capture_default_str();
    pattern_cmd->add_option("--out", pattern_args.out_path, "Write to a file instead of stdout");

    std::uint64_t dim_level = 0;
    unsigned dim_rule = 3;
    auto* dimension_cmd =
        app.add_subcommand("dimension", "Box-counting dimension of a natural-order mask");
    dimension_cmd->add_option("--level", dim_level, "Level of the grid")->required();
    dimension_cmd->add_option("--rule", dim_rule, "Boolean rule number")
        ->check(CLI::Range(0u, 255u))
        ->capture_default_str();

    unsigned max_width = 1;
    std::string eff_format = "csv";
    auto* efficiency_cmd =
        app.add_subcommand("efficiency", "Per-width standby savings of the rotation scheme");
    efficiency_cmd->add_option("--max-width", max_width, "Report widths 1..max")->required();
    efficiency_cmd->add_option("--format", eff_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    unsigned sim_width = 1;
    std::uint64_t sim_ticks = 0;
    std::string report_mode = "full";
    auto* simulate_cmd =
        app.add_subcommand("simulate", "Run the port rotation and report standby fairness");
    simulate_cmd->add_option("--width", sim_width, "Grid width w (2^w x 2^w ports)")
        ->required();
    auto* ticks_opt =
        simulate_cmd->add_option("--ticks", sim_ticks, "Tick count (default: one full period)");
    simulate_cmd->add_option("--report", report_mode, "Report mode")
        ->check(CLI::IsMember({"full", "summary"}))
        ->capture_default_str();

    unsigned cdma_k = 0;
    std::vector<std::int64_t> cdma_data;
    auto* cdma_cmd =
        app.add_subcommand("cdma", "Spread, superpose and despread station symbols");
    cdma_cmd->add_option("--k", cdma_k, "Codebook doublings (2^k codes)")->required();
    cdma_cmd->add_option("--data", cdma_data, "Comma-separated station symbols")
        ->delimiter(',')
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (pattern_cmd->parsed()) {
            pattern_args.order_given = order_opt->count() > 0;
            return run_pattern(pattern_args, out);
        }
        if (dimension_cmd->parsed())
            return run_dimension(dim_level, dim_rule, out);
        if (efficiency_cmd->parsed())
            return run_efficiency(max_width, eff_format, out);
        if (simulate_cmd->parsed())
            return run_simulate(sim_width,
                                ticks_opt->count() > 0
                                    ? std::optional<std::uint64_t>(sim_ticks)
                                    : std::nullopt,
                                report_mode, out);
        if (cdma_cmd->parsed())
            return run_cdma(cdma_k, cdma_data, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace cvtnet::cli
