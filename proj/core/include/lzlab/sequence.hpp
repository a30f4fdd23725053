#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace lzlab {

using Symbol = std::uint8_t;
using u128 = unsigned __int128;

/// Finite source alphabet {0, ..., size-1}. Sizes up to 256 so that a
/// symbol always fits in one byte of the sequence file format.
class Alphabet {
public:
    static constexpr unsigned kMaxSize = 256;

    explicit Alphabet(unsigned size);

    static Alphabet binary() { return Alphabet(2); }

    unsigned size() const { return size_; }
    /// Bits per raw symbol, ceil(log2 size).
    unsigned beta() const { return beta_; }

    bool operator==(const Alphabet&) const = default;

private:
    unsigned size_;
    unsigned beta_;
};

struct SymbolSequence {
    Alphabet alphabet = Alphabet::binary();
    std::vector<Symbol> symbols;

    std::size_t size() const { return symbols.size(); }
    std::span<const Symbol> view() const { return symbols; }

    /// Throws std::invalid_argument if any symbol is outside the alphabet.
    void validate() const;

    bool operator==(const SymbolSequence&) const = default;
};

/// Builds a sequence from a string of digit characters ("0101").
SymbolSequence sequence_from_digits(std::string_view digits, unsigned alphabet_size = 2);

// Sequence file: a text line "alphabet_size=<k>\n" followed by one byte per symbol.
void write_sequence_file(std::ostream& out, const SymbolSequence& seq);
SymbolSequence read_sequence_file(std::istream& in);

/// ceil(log2 v) for v >= 1.
unsigned ceil_log2(std::uint64_t v);
/// floor(log2 v) for v >= 1.
unsigned floor_log2(std::uint64_t v);

std::string to_string(u128 v);
std::string to_hex(u128 v);

}  // namespace lzlab
