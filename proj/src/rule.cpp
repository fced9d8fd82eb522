#include "cvtnet/rule.hpp"

#include <stdexcept>

namespace cvtnet {

BooleanRule rule_from_number(unsigned r)
{
    if (r > 255)
        throw std::invalid_argument("rule number must be in [0, 255]");
    BooleanRule rule;
    rule.number = static_cast<std::uint8_t>(r);
    for (unsigned i = 0; i < 8; ++i)
        rule.table[i] = static_cast<std::uint8_t>((r >> i) & 1u);
    return rule;
}

} // namespace cvtnet
