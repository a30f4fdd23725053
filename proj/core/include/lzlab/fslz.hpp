#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzlab/bitio.hpp"
#include "lzlab/recurrence.hpp"
#include "lzlab/sequence.hpp"

namespace lzlab::fslz {

/// Fixed-shift LZ: after a raw window of n_w symbols the input is cut into
/// blocks of exactly l_o symbols. Each block is either a pointer to a copy
/// starting in the n_w symbols before it, or l_o raw symbols.
struct FslzParams {
    std::size_t n_w = 0;
    std::size_t l_o = 0;
    Alphabet alphabet = Alphabet::binary();

    /// Requires n_w >= 2 and 1 <= l_o < n_w.
    void validate() const;
};

struct FslzStats {
    std::size_t n_total = 0;
    std::size_t m = 0;   // blocks
    std::size_t m1 = 0;  // matched blocks
    std::size_t m2 = 0;  // literal blocks
    std::size_t tail = 0;
    std::size_t header_bits = 0;
    std::size_t bits_total = 0;  // header included, byte padding excluded
    double ratio = 0.0;          // bits_total / (beta * N)
};

struct FslzBlock {
    std::size_t start = 0;
    bool matched = false;
    std::size_t offset = 0;  // copy starts at start - n_w + offset
};

struct FslzEncoded {
    std::vector<std::uint8_t> frame;
    FslzStats stats;
    std::vector<FslzBlock> blocks;
};

/// floor(f^-1(log2 n_w / (c + epsilon))) clamped to [1, n_w - 1].
std::size_t choose_match_length(const recurrence::ReturnLaw& law, std::size_t n_w);

/// Leftmost copy wins; the copy must start strictly before the block.
FslzEncoded fslz_encode(const SymbolSequence& x, const FslzParams& params);
SymbolSequence fslz_decode(std::span<const std::uint8_t> frame);

/// Per-symbol terms of the FSLZ bit budget. The four parts sum to
/// (bits_total - header_bits) / N.
struct RateDecomposition {
    double uncompressed = 0.0;  // (N - m l_o) beta / N
    double matched = 0.0;       // m1 ceil(log2 n_w) / N
    double literal = 0.0;       // m2 beta l_o / N
    double flags = 0.0;         // m / N
    bool block_count_bound = false;  // m1 <= m < N / l_o

    double total() const { return uncompressed + matched + literal + flags; }
};

RateDecomposition fslz_rate_report(const FslzStats& stats, const FslzParams& params);

}  // namespace lzlab::fslz
