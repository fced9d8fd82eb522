#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

#include "cvtnet/analysis.hpp"
#include "oracles.hpp"

using namespace cvtnet;

namespace {

const double kLog3OverLog2 = std::log(3.0) / std::log(2.0); // 1.584962500721156

ZeroMask natural_rule3_mask(unsigned width)
{
    const std::uint64_t level = std::uint64_t{1} << (width - 1);
    return zero_mask(generate_grid(level, 1u << width, rule3()));
}

std::uint64_t pow3(unsigned n)
{
    std::uint64_t v = 1;
    while (n--)
        v *= 3;
    return v;
}

} // namespace

TEST_CASE("similarity dimension formula")
{
    CHECK(similarity_dimension(3, 0.5) == doctest::Approx(kLog3OverLog2).epsilon(1e-12));
    CHECK(similarity_dimension(4, 0.5) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(similarity_dimension(1, 0.5) == 0.0);

    CHECK_THROWS_AS(similarity_dimension(3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(similarity_dimension(3, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(similarity_dimension(3, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(similarity_dimension(3, -0.5), std::invalid_argument);
    CHECK_THROWS_AS(similarity_dimension(0, 0.5), std::invalid_argument);
}

TEST_CASE("box_count examples")
{
    const ZeroMask mask = natural_rule3_mask(3);
    CHECK(box_count(mask, 2) == 9);
    CHECK(box_count(mask, 2) == oracle::box_count_via_set(mask, 2));
    CHECK(box_count(mask, 8) == 1); // whole-mask box, mask is non-empty

    ZeroMask empty{8, std::vector<std::uint8_t>(64, 0)};
    CHECK(box_count(empty, 8) == 0);

    ZeroMask full{4, std::vector<std::uint8_t>(16, 1)};
    CHECK(box_count(full, 1) == 16);
}

TEST_CASE("box_count rejects sizes that do not evenly tile the mask")
{
    const ZeroMask mask = natural_rule3_mask(3);
    CHECK_THROWS_AS(box_count(mask, 0), std::invalid_argument);
    CHECK_THROWS_AS(box_count(mask, 3), std::invalid_argument);
    CHECK_THROWS_AS(box_count(mask, 16), std::invalid_argument);

    ZeroMask odd{6, std::vector<std::uint8_t>(36, 1)};
    CHECK_THROWS_AS(box_count(odd, 4), std::invalid_argument);
}

TEST_CASE("exact box-count law: 3^(w-j) boxes at size 2^j")
{
    for (unsigned w = 1; w <= 6; ++w) {
        const ZeroMask mask = natural_rule3_mask(w);
        for (unsigned j = 0; j <= w; ++j) {
            const std::uint64_t expected = pow3(w - j);
            CHECK(box_count(mask, 1u << j) == expected);
            CHECK(oracle::box_count_via_set(mask, 1u << j) == expected);
        }
    }
}

TEST_CASE("box counts never increase as boxes double")
{
    std::mt19937 rng(7);
    std::bernoulli_distribution coin(0.2);
    for (int trial = 0; trial < 20; ++trial) {
        ZeroMask mask{16, std::vector<std::uint8_t>(256)};
        for (auto& b : mask.bits)
            b = coin(rng) ? 1 : 0;
        std::uint64_t prev = ~std::uint64_t{0};
        for (unsigned s = 1; s <= 16; s *= 2) {
            const std::uint64_t c = box_count(mask, s);
            CHECK(c <= prev);
            prev = c;
        }
    }
}

TEST_CASE("dimension of the rule-3 mask is log3/log2 with collinear points")
{
    for (unsigned w = 2; w <= 8; ++w) {
        const DimensionEstimate est = estimate_dimension(natural_rule3_mask(w));
        CHECK(est.slope == doctest::Approx(kLog3OverLog2).epsilon(1e-12));
        CHECK(est.residual < 1e-9);
        CHECK(est.points.size() == w);
        // points run over sizes 1, 2, ..., 2^(w-1) with counts 3^w ... 3.
        for (unsigned j = 0; j < w; ++j) {
            CHECK(est.points[j].first == (1u << j));
            CHECK(est.points[j].second == pow3(w - j));
        }
    }
}

TEST_CASE("degenerate masks give the flat and plane-filling slopes")
{
    ZeroMask full{8, std::vector<std::uint8_t>(64, 1)};
    const DimensionEstimate plane = estimate_dimension(full);
    CHECK(plane.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(plane.residual < 1e-12);

    ZeroMask dot{8, std::vector<std::uint8_t>(64, 0)};
    dot.bits[3 * 8 + 5] = 1;
    const DimensionEstimate point = estimate_dimension(dot);
    CHECK(point.slope == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(point.residual < 1e-12);

    // One full row occupies order/size boxes at every scale: slope 1.
    ZeroMask row{8, std::vector<std::uint8_t>(64, 0)};
    for (unsigned x = 0; x < 8; ++x)
        row.bits[x] = 1;
    const DimensionEstimate line = estimate_dimension(row);
    CHECK(line.slope == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(line.residual < 1e-12);
}

TEST_CASE("estimate_dimension preconditions")
{
    ZeroMask empty{8, std::vector<std::uint8_t>(64, 0)};
    CHECK_THROWS_AS(estimate_dimension(empty), std::domain_error);

    ZeroMask tiny{2, {1, 1, 1, 0}};
    CHECK_THROWS_AS(estimate_dimension(tiny), std::invalid_argument);

    ZeroMask odd{6, std::vector<std::uint8_t>(36, 1)};
    CHECK_THROWS_AS(estimate_dimension(odd), std::invalid_argument);
}
