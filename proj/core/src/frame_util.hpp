#pragma once

#include <span>
#include <string>

#include "lzlab/bitio.hpp"
#include "lzlab/sequence.hpp"

namespace lzlab::detail {

inline void write_raw(bitio::BitWriter& out, std::span<const Symbol> symbols, unsigned beta) {
    for (Symbol s : symbols) out.write_fixed(s, beta);
}

inline Symbol read_raw(bitio::BitReader& in, unsigned beta, unsigned alphabet_size) {
    const auto v = in.read_fixed(beta);
    if (v >= alphabet_size) {
        throw bitio::DecodeError(bitio::DecodeErrc::symbol_out_of_range,
                                 "symbol " + std::to_string(v) + " at bit " + std::to_string(in.position()));
    }
    return static_cast<Symbol>(v);
}

// Only the zero padding of the final byte may follow the last phrase.
inline void expect_end(bitio::BitReader& in) {
    if (in.remaining() >= 8) {
        throw bitio::DecodeError(bitio::DecodeErrc::trailing_data,
                                 std::to_string(in.remaining()) + " bits after the last phrase");
    }
    while (in.remaining() > 0) {
        if (in.get_bit()) throw bitio::DecodeError(bitio::DecodeErrc::trailing_data, "nonzero padding bits");
    }
}

}  // namespace lzlab::detail
