#pragma once

#include <array>
#include <cstdint>

namespace cvtnet {

// Three-variable Boolean function named by its Wolfram rule number.
// table[i] holds f(a,b,c) for i = 4a + 2b + c; bit 0 of the rule number
// is f(0,0,0), so e.g. rule 3 has f(0,0,0) = f(0,0,1) = 1 and 0 elsewhere.
struct BooleanRule {
    std::uint8_t number = 0;
    std::array<std::uint8_t, 8> table{};

    bool operator==(const BooleanRule&) const = default;
};

// Builds the truth table for rule number r in [0, 255].
// Throws std::invalid_argument outside that range.
BooleanRule rule_from_number(unsigned r);

// f(a,b,c) for single bits. Arguments are masked to their low bit.
inline unsigned eval_rule(const BooleanRule& rule, unsigned a, unsigned b, unsigned c)
{
    return rule.table[((a & 1u) << 2) | ((b & 1u) << 1) | (c & 1u)];
}

// The default rule throughout: the one whose zero set tiles into a
// Sierpinski-type triangle.
inline BooleanRule rule3()
{
    return rule_from_number(3);
}

} // namespace cvtnet
