#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzlab/sequence.hpp"

namespace lzlab {

/// Exact names for all length-`length` words of a sequence: ids()[p] ==
/// ids()[q] iff x[p..p+length) == x[q..q+length). Built by prefix doubling
/// with radix-sorted pair ranking, O(N log length) time, no hashing.
class WordIndex {
public:
    WordIndex(std::span<const Symbol> x, std::size_t length);

    std::size_t length() const { return length_; }
    /// One id per start position p in [0, N - length]; empty when N < length.
    std::span<const std::uint32_t> ids() const { return ids_; }
    std::uint32_t distinct() const { return distinct_; }

    /// R_length(t) for every t: smallest l >= 1 with the same word at t - l,
    /// or 0 when the word has not occurred before t.
    std::vector<std::uint64_t> first_returns() const;

    /// Start positions of each id in increasing order (CSR layout).
    struct Occurrences {
        std::vector<std::uint32_t> offsets;  // size distinct()+1
        std::vector<std::uint32_t> positions;

        std::span<const std::uint32_t> of(std::uint32_t id) const {
            return std::span<const std::uint32_t>(positions).subspan(offsets[id], offsets[id + 1] - offsets[id]);
        }
    };
    Occurrences occurrences() const;

private:
    std::size_t length_;
    std::vector<std::uint32_t> ids_;
    std::uint32_t distinct_ = 0;
};

}  // namespace lzlab
