#include "lzlab/sequence.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>

namespace lzlab {

Alphabet::Alphabet(unsigned size) : size_(size), beta_(0) {
    if (size < 2 || size > kMaxSize) {
        throw std::invalid_argument("alphabet size must be in [2, 256], got " + std::to_string(size));
    }
    beta_ = ceil_log2(size);
}

void SymbolSequence::validate() const {
    const auto limit = alphabet.size();
    auto bad = std::find_if(symbols.begin(), symbols.end(), [limit](Symbol s) { return s >= limit; });
    if (bad != symbols.end()) {
        throw std::invalid_argument("symbol " + std::to_string(*bad) + " at index " +
                                    std::to_string(bad - symbols.begin()) + " outside alphabet of size " +
                                    std::to_string(limit));
    }
}

SymbolSequence sequence_from_digits(std::string_view digits, unsigned alphabet_size) {
    SymbolSequence seq{Alphabet(alphabet_size), {}};
    seq.symbols.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument("non-digit symbol in pattern");
        seq.symbols.push_back(static_cast<Symbol>(c - '0'));
    }
    seq.validate();
    return seq;
}

void write_sequence_file(std::ostream& out, const SymbolSequence& seq) {
    out << "alphabet_size=" << seq.alphabet.size() << '\n';
    out.write(reinterpret_cast<const char*>(seq.symbols.data()), static_cast<std::streamsize>(seq.symbols.size()));
    if (!out) throw std::runtime_error("failed writing sequence file");
}

SymbolSequence read_sequence_file(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("sequence file: missing header line");
    constexpr std::string_view key = "alphabet_size=";
    if (line.rfind(key, 0) != 0) throw std::runtime_error("sequence file: bad header '" + line + "'");
    unsigned size = 0;
    try {
        size = static_cast<unsigned>(std::stoul(line.substr(key.size())));
    } catch (const std::exception&) {
        throw std::runtime_error("sequence file: bad alphabet size '" + line + "'");
    }
    SymbolSequence seq{Alphabet(size), {}};
    seq.symbols.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    seq.validate();
    return seq;
}

unsigned ceil_log2(std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("ceil_log2(0)");
    return v == 1 ? 0u : static_cast<unsigned>(std::bit_width(v - 1));
}

unsigned floor_log2(std::uint64_t v) {
    if (v == 0) throw std::invalid_argument("floor_log2(0)");
    return static_cast<unsigned>(std::bit_width(v)) - 1;
}

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_hex(u128 v) {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s(32, '0');
    for (int i = 31; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[static_cast<unsigned>(v & 0xF)];
        v >>= 4;
    }
    return "0x" + s;
}

}  // namespace lzlab
