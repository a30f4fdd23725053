#include "lzlab/bitio.hpp"

#include <algorithm>
#include <cstring>

#include "lzlab/sequence.hpp"

namespace lzlab::bitio {

const char* to_string(DecodeErrc code) {
    switch (code) {
        case DecodeErrc::bad_magic: return "bad magic";
        case DecodeErrc::bad_version: return "unsupported version";
        case DecodeErrc::bad_header: return "invalid header field";
        case DecodeErrc::truncated: return "truncated stream";
        case DecodeErrc::offset_out_of_range: return "match offset out of range";
        case DecodeErrc::length_out_of_range: return "phrase length out of range";
        case DecodeErrc::symbol_out_of_range: return "symbol outside alphabet";
        case DecodeErrc::malformed_code: return "malformed integer code";
        case DecodeErrc::trailing_data: return "trailing data after frame";
    }
    return "unknown decode error";
}

DecodeError::DecodeError(DecodeErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void BitWriter::put_bit(bool bit) {
    const std::size_t byte = bit_length_ >> 3;
    if (byte == bytes_.size()) bytes_.push_back(0);
    if (bit) bytes_[byte] |= static_cast<std::uint8_t>(0x80u >> (bit_length_ & 7));
    ++bit_length_;
}

void BitWriter::write_fixed(std::uint64_t value, unsigned width) {
    if (width < 1 || width > 64) throw std::invalid_argument("write_fixed: width must be in [1, 64]");
    if (width < 64 && (value >> width) != 0) {
        throw std::invalid_argument("write_fixed: value " + std::to_string(value) + " does not fit in " +
                                    std::to_string(width) + " bits");
    }
    for (unsigned i = width; i-- > 0;) put_bit(((value >> i) & 1u) != 0);
}

void BitWriter::write_bytes(std::span<const std::uint8_t> bytes) {
    for (std::uint8_t b : bytes) write_fixed(b, 8);
}

BitReader::BitReader(std::span<const std::uint8_t> bytes) : BitReader(bytes, bytes.size() * 8) {}

BitReader::BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_length)
    : bytes_(bytes), bit_length_(bit_length) {
    if (bit_length > bytes.size() * 8) throw std::invalid_argument("BitReader: bit length exceeds buffer");
}

void BitReader::require(std::size_t bits) const {
    if (bits > remaining()) {
        throw DecodeError(DecodeErrc::truncated, "need " + std::to_string(bits) + " bits at position " +
                                                     std::to_string(pos_) + ", have " + std::to_string(remaining()));
    }
}

bool BitReader::get_bit() {
    require(1);
    const bool bit = (bytes_[pos_ >> 3] & (0x80u >> (pos_ & 7))) != 0;
    ++pos_;
    return bit;
}

std::uint64_t BitReader::read_fixed(unsigned width) {
    if (width < 1 || width > 64) throw std::invalid_argument("read_fixed: width must be in [1, 64]");
    require(width);
    std::uint64_t v = 0;
    for (unsigned i = 0; i < width; ++i) v = (v << 1) | (get_bit() ? 1u : 0u);
    return v;
}

void BitReader::read_bytes(std::span<std::uint8_t> out) {
    require(out.size() * 8);
    for (auto& b : out) b = static_cast<std::uint8_t>(read_fixed(8));
}

unsigned elias_gamma_length(std::uint64_t l) {
    if (l < 1) throw std::invalid_argument("elias_gamma: value must be >= 1");
    return 2 * floor_log2(l) + 1;
}

void elias_gamma_encode(BitWriter& out, std::uint64_t l) {
    if (l < 1) throw std::invalid_argument("elias_gamma: value must be >= 1");
    const unsigned n = floor_log2(l);
    for (unsigned i = 0; i < n; ++i) out.put_bit(false);
    out.write_fixed(l, n + 1);
}

std::uint64_t elias_gamma_decode(BitReader& in) {
    unsigned zeros = 0;
    while (!in.get_bit()) {
        if (++zeros > 63) throw DecodeError(DecodeErrc::malformed_code, "gamma prefix longer than 63 zeros");
    }
    std::uint64_t v = 1;
    if (zeros > 0) v = (v << zeros) | in.read_fixed(zeros);
    return v;
}

namespace {

constexpr std::array<char, 4> kFslzMagic{'F', 'S', 'L', 'Z'};
constexpr std::array<char, 4> kSwlzMagic{'S', 'W', 'L', 'Z'};

}  // namespace

std::array<char, 4> FrameHeader::magic() const {
    return codec == Codec::fslz ? kFslzMagic : kSwlzMagic;
}

void FrameHeader::write(BitWriter& out) const {
    for (char c : magic()) out.write_fixed(static_cast<std::uint8_t>(c), 8);
    out.write_fixed(version, 8);
    out.write_fixed(alphabet_size, 16);
    out.write_fixed(n_w, 32);
    out.write_fixed(l_o, 32);
    out.write_fixed(n_total, 64);
}

FrameHeader FrameHeader::read(BitReader& in) {
    std::array<char, 4> magic{};
    for (char& c : magic) c = static_cast<char>(in.read_fixed(8));
    FrameHeader h;
    if (magic == kFslzMagic) {
        h.codec = Codec::fslz;
    } else if (magic == kSwlzMagic) {
        h.codec = Codec::swlz;
    } else {
        throw DecodeError(DecodeErrc::bad_magic, "got '" + std::string(magic.begin(), magic.end()) + "'");
    }
    h.version = static_cast<std::uint8_t>(in.read_fixed(8));
    if (h.version != kVersion) throw DecodeError(DecodeErrc::bad_version, "version " + std::to_string(h.version));
    h.alphabet_size = static_cast<std::uint16_t>(in.read_fixed(16));
    h.n_w = static_cast<std::uint32_t>(in.read_fixed(32));
    h.l_o = static_cast<std::uint32_t>(in.read_fixed(32));
    h.n_total = in.read_fixed(64);

    if (h.alphabet_size < 2 || h.alphabet_size > Alphabet::kMaxSize) {
        throw DecodeError(DecodeErrc::bad_header, "alphabet size " + std::to_string(h.alphabet_size));
    }
    if (h.n_w < 2) throw DecodeError(DecodeErrc::bad_header, "window " + std::to_string(h.n_w));
    if (h.n_total < h.n_w) throw DecodeError(DecodeErrc::bad_header, "n_total smaller than window");
    if (h.codec == Codec::fslz && (h.l_o < 1 || h.l_o >= h.n_w)) {
        throw DecodeError(DecodeErrc::bad_header, "FSLZ block length " + std::to_string(h.l_o));
    }
    if (h.codec == Codec::swlz && h.l_o != 0) throw DecodeError(DecodeErrc::bad_header, "SWLZ l_o must be zero");
    return h;
}

}  // namespace lzlab::bitio
