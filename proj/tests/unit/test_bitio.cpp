#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "lzlab/bitio.hpp"
#include "test_support.hpp"

using namespace lzlab;
using namespace lzlab::bitio;

TEST_CASE("write_fixed renders big-endian bits") {
    BitWriter w;
    w.write_fixed(5, 3);
    CHECK(test::bits_of(w) == "101");

    BitWriter z;
    z.write_fixed(0, 1);
    CHECK(test::bits_of(z) == "0");

    BitWriter pad;
    pad.write_fixed(0b101, 3);
    REQUIRE(pad.bytes().size() == 1);
    CHECK(pad.bytes()[0] == 0b1010'0000);

    CHECK_THROWS_AS(w.write_fixed(8, 3), std::invalid_argument);
    CHECK_THROWS_AS(w.write_fixed(0, 0), std::invalid_argument);
}

TEST_CASE("read past end is a truncation error") {
    BitWriter w;
    w.write_fixed(3, 2);
    BitReader r(w.bytes(), w.bit_length());
    CHECK(r.read_fixed(2) == 3);
    try {
        r.get_bit();
        FAIL("expected truncation");
    } catch (const DecodeError& e) {
        CHECK(e.code() == DecodeErrc::truncated);
    }
}

TEST_CASE("fixed-width round trip property") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<unsigned> width_dist(1, 64);
    std::vector<std::pair<std::uint64_t, unsigned>> fields;
    BitWriter w;
    for (int i = 0; i < 10'000; ++i) {
        const unsigned width = width_dist(rng);
        std::uint64_t v = rng();
        if (width < 64) v &= (std::uint64_t{1} << width) - 1;
        fields.emplace_back(v, width);
        w.write_fixed(v, width);
    }
    BitReader r(w.bytes(), w.bit_length());
    for (const auto& [v, width] : fields) REQUIRE(r.read_fixed(width) == v);
    CHECK(r.remaining() == 0);
}

TEST_CASE("elias gamma codewords") {
    auto code = [](std::uint64_t l) {
        BitWriter w;
        elias_gamma_encode(w, l);
        return test::bits_of(w);
    };
    CHECK(code(1) == "1");
    CHECK(code(2) == "010");
    CHECK(code(5) == "00101");
    CHECK(code(8) == "0001000");
    CHECK_THROWS_AS(code(0), std::invalid_argument);
    CHECK_THROWS_AS(elias_gamma_length(0), std::invalid_argument);
}

TEST_CASE("elias gamma length law, round trip and prefix freedom up to 2^16") {
    std::set<std::string> words;
    BitWriter all;
    for (std::uint64_t l = 1; l <= (1u << 16); ++l) {
        BitWriter w;
        elias_gamma_encode(w, l);
        elias_gamma_encode(all, l);
        REQUIRE(w.bit_length() == 2 * floor_log2(l) + 1);
        REQUIRE(elias_gamma_length(l) == w.bit_length());
        words.insert(test::bits_of(w));
    }
    for (const auto& w : words) {
        for (std::size_t len = 1; len < w.size(); ++len) REQUIRE(words.count(w.substr(0, len)) == 0);
    }
    BitReader r(all.bytes(), all.bit_length());
    for (std::uint64_t l = 1; l <= (1u << 16); ++l) REQUIRE(elias_gamma_decode(r) == l);

    // gamma(l) <= 3 log2(l + 1) for l >= 1 (the gamma <= 3 constant)
    for (std::uint64_t l = 2; l < 100'000; l += 7) {
        CHECK(elias_gamma_length(l) <= 3.0 * std::log2(static_cast<double>(l + 1)));
    }

    const std::uint64_t big = (std::uint64_t{1} << 63) + 12345;
    BitWriter w;
    elias_gamma_encode(w, big);
    BitReader rb(w.bytes(), w.bit_length());
    CHECK(elias_gamma_decode(rb) == big);
}

TEST_CASE("malformed gamma prefix") {
    BitWriter w;
    for (int i = 0; i < 70; ++i) w.put_bit(false);
    w.put_bit(true);
    BitReader r(w.bytes(), w.bit_length());
    try {
        elias_gamma_decode(r);
        FAIL("expected malformed code");
    } catch (const DecodeError& e) {
        CHECK(e.code() == DecodeErrc::malformed_code);
    }
}

TEST_CASE("frame header layout and round trip") {
    FrameHeader h{Codec::fslz, FrameHeader::kVersion, 2, 1024, 256, 65536};
    BitWriter w;
    h.write(w);
    REQUIRE(w.bit_length() == FrameHeader::kBits);
    const std::vector<std::uint8_t> expected{'F', 'S', 'L', 'Z', 1, 0, 2, 0, 0, 4, 0, 0, 0, 1, 0,
                                             0, 0, 0, 0, 0, 1, 0, 0};
    CHECK(w.bytes() == expected);

    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        FrameHeader g;
        g.codec = (rng() & 1) ? Codec::fslz : Codec::swlz;
        g.alphabet_size = static_cast<std::uint16_t>(2 + rng() % 255);
        g.n_w = static_cast<std::uint32_t>(2 + rng() % 100000);
        g.l_o = g.codec == Codec::fslz ? static_cast<std::uint32_t>(1 + rng() % (g.n_w - 1)) : 0;
        g.n_total = g.n_w + rng() % 1000000;
        BitWriter gw;
        g.write(gw);
        BitReader gr(gw.bytes());
        REQUIRE(FrameHeader::read(gr) == g);
    }
}

TEST_CASE("frame header validation") {
    auto read_code = [](std::vector<std::uint8_t> bytes) {
        BitReader r(bytes);
        try {
            FrameHeader::read(r);
        } catch (const DecodeError& e) {
            return e.code();
        }
        FAIL("header unexpectedly accepted");
        return DecodeErrc::bad_header;
    };
    FrameHeader h{Codec::swlz, FrameHeader::kVersion, 2, 16, 0, 64};
    BitWriter w;
    h.write(w);
    auto bytes = w.bytes();

    auto bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK(read_code(bad_magic) == DecodeErrc::bad_magic);

    auto bad_version = bytes;
    bad_version[4] = 2;
    CHECK(read_code(bad_version) == DecodeErrc::bad_version);

    auto bad_alphabet = bytes;
    bad_alphabet[6] = 1;
    CHECK(read_code(bad_alphabet) == DecodeErrc::bad_header);

    auto swlz_with_l_o = bytes;
    swlz_with_l_o[14] = 3;
    CHECK(read_code(swlz_with_l_o) == DecodeErrc::bad_header);

    auto short_total = bytes;
    short_total[22] = 3;
    CHECK(read_code(short_total) == DecodeErrc::bad_header);

    CHECK(read_code({bytes.begin(), bytes.begin() + 10}) == DecodeErrc::truncated);
}
