#include "cvtnet/cdma.hpp"

#include <stdexcept>

namespace cvtnet {

WalshCodeBook walsh_codes(unsigned k)
{
    if (k > kMaxWalshDoublings)
        throw std::invalid_argument("walsh_codes: k must be in [0, 10]");

    const unsigned order = 1u << k;
    WalshCodeBook book;
    book.order = order;
    book.codes.assign(order, std::vector<std::int8_t>(order, 1));
    // Sylvester doubling in place: the top-left block already holds the
    // half-size matrix, the three copies fill the rest (bottom-right negated).
    for (unsigned half = 1; half < order; half *= 2)
        for (unsigned i = 0; i < half; ++i)
            for (unsigned j = 0; j < half; ++j) {
                const std::int8_t v = book.codes[i][j];
                book.codes[i][j + half] = v;
                book.codes[i + half][j] = v;
                book.codes[i + half][j + half] = static_cast<std::int8_t>(-v);
            }
    return book;
}

ChannelFrame channel_encode(std::span<const std::int64_t> data, const WalshCodeBook& book)
{
    if (data.size() > book.order)
        throw std::invalid_argument("channel_encode: more station symbols than codes");

    ChannelFrame frame;
    frame.samples.assign(book.order, 0);
    for (std::size_t i = 0; i < data.size(); ++i)
        for (unsigned j = 0; j < book.order; ++j)
            frame.samples[j] += data[i] * book.codes[i][j];
    return frame;
}

std::int64_t channel_decode(const ChannelFrame& frame, const WalshCodeBook& book,
                            unsigned station)
{
    if (station >= book.order)
        throw std::invalid_argument("channel_decode: station index out of range");
    if (frame.samples.size() != book.order)
        throw std::invalid_argument("channel_decode: frame length does not match the codebook");

    std::int64_t dot = 0;
    for (unsigned j = 0; j < book.order; ++j)
        dot += frame.samples[j] * book.codes[station][j];
    return dot / static_cast<std::int64_t>(book.order);
}

} // namespace cvtnet
