#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lzlab/bitio.hpp"
#include "lzlab/sequence.hpp"

namespace lzlab::swlz {

struct SwlzParams {
    std::size_t n_w = 0;
    Alphabet alphabet = Alphabet::binary();

    /// Requires 2 <= n_w < 2^32.
    void validate() const;
};

/// A copy of `length` symbols starting at window offset `offset`, i.e. at
/// t - n_w + offset. length == 0 means x[t] does not occur in the window;
/// offset is then 0.
struct Match {
    std::size_t offset = 0;
    std::size_t length = 0;

    bool operator==(const Match&) const = default;
};

/// Reference scan over every start in [t - n_w, t): longest copy of at
/// most `cap` symbols, leftmost start on ties. O(n_w * length).
Match longest_match_naive(std::span<const Symbol> x, std::size_t t, std::size_t n_w, std::size_t cap);

/// Indexed longest-match search with the same contract as
/// longest_match_naive. Starts sharing the next q symbols are chained
/// backwards through a q-gram index; matches shorter than q fall back to a
/// bounded scan.
class MatchFinder {
public:
    MatchFinder(std::span<const Symbol> x, std::size_t n_w, unsigned alphabet_size);

    Match find(std::size_t t, std::size_t cap) const;
    std::size_t gram_length() const { return q_; }

private:
    std::span<const Symbol> x_;
    std::size_t n_w_;
    std::size_t q_;
    std::vector<std::uint32_t> prev_;  // previous start of the same q-gram, or kNone
    mutable std::vector<std::uint32_t> scratch_;
};

enum class PhraseMode { match, literal };

struct PhraseCost {
    std::size_t bits = 0;  // B(x^(j)), excluding the one-bit flag
    PhraseMode mode = PhraseMode::literal;
};

/// Match branch: gamma(l) + ceil(log2 n_w). Literal branch: gamma(l) + beta*l.
/// The match branch wins ties; without a window copy only the literal
/// branch is available.
PhraseCost phrase_cost(std::size_t length, bool match_available, std::size_t n_w, unsigned beta);

struct Phrase {
    std::size_t start = 0;
    std::size_t length = 0;
    PhraseMode mode = PhraseMode::literal;
    std::size_t offset = 0;  // match mode only
    std::size_t cost = 0;    // B(x^(j))
};

struct SwlzStats {
    std::size_t n_total = 0;
    std::size_t c_n = 0;
    std::size_t matched = 0;
    std::size_t literal = 0;
    std::size_t header_bits = 0;
    std::size_t bits_total = 0;  // header + n_w beta + sum(B + 1)
    double ratio = 0.0;          // bits_total / (beta * N)
};

struct SwlzEncoded {
    std::vector<std::uint8_t> frame;
    SwlzStats stats;
    std::vector<Phrase> phrases;
};

/// Greedy longest-match parse against the trailing n_w symbols.
SwlzEncoded swlz_encode(const SymbolSequence& x, const SwlzParams& params);
SymbolSequence swlz_decode(std::span<const std::uint8_t> frame);

struct BadIntervals {
    std::size_t bad = 0;
    std::size_t intervals = 0;  // N' = N - l_o - n_w + 1
    double fraction = 0.0;
};

/// Counts positions p in [n_w, N - l_o] whose next l_o symbols have no copy
/// starting among the n_w - l_o symbols before p.
BadIntervals bad_interval_fraction(std::span<const Symbol> x, std::size_t l_o, std::size_t n_w);

}  // namespace lzlab::swlz
