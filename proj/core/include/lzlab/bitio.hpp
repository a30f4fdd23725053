#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lzlab::bitio {

enum class DecodeErrc {
    bad_magic,
    bad_version,
    bad_header,
    truncated,
    offset_out_of_range,
    length_out_of_range,
    symbol_out_of_range,
    malformed_code,
    trailing_data,
};

const char* to_string(DecodeErrc code);

/// Raised by every reader and frame decoder. `code()` distinguishes the
/// failure so callers and tests never have to match on message text.
class DecodeError : public std::runtime_error {
public:
    DecodeError(DecodeErrc code, const std::string& what);
    DecodeErrc code() const { return code_; }

private:
    DecodeErrc code_;
};

/// Append-only bit container, MSB-first within each byte.
class BitWriter {
public:
    void put_bit(bool bit);
    /// Writes `value` in exactly `width` bits, most significant bit first.
    /// Requires 1 <= width <= 64 and value < 2^width.
    void write_fixed(std::uint64_t value, unsigned width);
    void write_bytes(std::span<const std::uint8_t> bytes);

    std::size_t bit_length() const { return bit_length_; }
    /// Serialized bytes; the final byte is zero-padded.
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }
    std::vector<std::uint8_t> release() && { return std::move(bytes_); }

private:
    std::vector<std::uint8_t> bytes_;
    std::size_t bit_length_ = 0;
};

class BitReader {
public:
    explicit BitReader(std::span<const std::uint8_t> bytes);
    BitReader(std::span<const std::uint8_t> bytes, std::size_t bit_length);

    bool get_bit();
    std::uint64_t read_fixed(unsigned width);
    void read_bytes(std::span<std::uint8_t> out);

    std::size_t position() const { return pos_; }
    std::size_t bit_length() const { return bit_length_; }
    std::size_t remaining() const { return bit_length_ - pos_; }

private:
    void require(std::size_t bits) const;

    std::span<const std::uint8_t> bytes_;
    std::size_t bit_length_;
    std::size_t pos_ = 0;
};

/// Elias-gamma code: floor(log2 l) zeros, then l in binary. 2*floor(log2 l)+1 bits.
void elias_gamma_encode(BitWriter& out, std::uint64_t l);
std::uint64_t elias_gamma_decode(BitReader& in);
unsigned elias_gamma_length(std::uint64_t l);

enum class Codec { fslz, swlz };

/// Fixed 23-byte big-endian frame header shared by both codecs.
struct FrameHeader {
    static constexpr std::size_t kBytes = 23;
    static constexpr std::size_t kBits = kBytes * 8;
    static constexpr std::uint8_t kVersion = 1;

    Codec codec = Codec::swlz;
    std::uint8_t version = kVersion;
    std::uint16_t alphabet_size = 2;
    std::uint32_t n_w = 0;
    std::uint32_t l_o = 0;
    std::uint64_t n_total = 0;

    std::array<char, 4> magic() const;
    void write(BitWriter& out) const;
    /// Parses and validates magic, version and field ranges.
    static FrameHeader read(BitReader& in);

    bool operator==(const FrameHeader&) const = default;
};

}  // namespace lzlab::bitio
