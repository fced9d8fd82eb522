#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cvtnet {

inline constexpr unsigned kMaxWalshDoublings = 10;

// 2^k mutually orthogonal +1/-1 codes of length 2^k, built by Sylvester
// doubling. Distinct codes have inner product 0; a code with itself, order.
struct WalshCodeBook {
    unsigned order = 1;
    std::vector<std::vector<std::int8_t>> codes;
};

// Throws std::invalid_argument for k > kMaxWalshDoublings.
WalshCodeBook walsh_codes(unsigned k);

// Superposed channel: elementwise sum of data[i] * codes[i].
struct ChannelFrame {
    std::vector<std::int64_t> samples;
};

// Throws std::invalid_argument when there are more station symbols than codes.
ChannelFrame channel_encode(std::span<const std::int64_t> data, const WalshCodeBook& book);

// Despreads one station: inner product with its code divided by the order.
// Exact for frames produced by channel_encode. Throws std::invalid_argument
// for a bad station index or a frame whose length does not match the book.
std::int64_t channel_decode(const ChannelFrame& frame, const WalshCodeBook& book, unsigned station);

} // namespace cvtnet
