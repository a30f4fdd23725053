#include "lzlab/fslz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "frame_util.hpp"
#include "lzlab/word_index.hpp"

namespace lzlab::fslz {

using bitio::DecodeErrc;
using bitio::DecodeError;

void FslzParams::validate() const {
    if (n_w < 2) throw std::invalid_argument("FSLZ: window must be >= 2");
    if (n_w > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("FSLZ: window exceeds 32 bits");
    if (l_o < 1 || l_o >= n_w) {
        throw std::invalid_argument("FSLZ: block length must satisfy 1 <= l_o < n_w, got " + std::to_string(l_o));
    }
}

std::size_t choose_match_length(const recurrence::ReturnLaw& law, std::size_t n_w) {
    if (n_w < 2) throw std::invalid_argument("choose_match_length: window must be >= 2");
    law.validate();
    const double y = std::log2(static_cast<double>(n_w)) / (law.c + law.epsilon);
    const double v = law.f_inverse(y);
    // Absorb rounding when the exact value is an integer (1024^0.8 = 256).
    const double floored = std::floor(v * (1.0 + 1e-12));
    const double hi = static_cast<double>(n_w - 1);
    return static_cast<std::size_t>(std::clamp(floored, 1.0, hi));
}

FslzEncoded fslz_encode(const SymbolSequence& x, const FslzParams& params) {
    params.validate();
    if (x.alphabet != params.alphabet) throw std::invalid_argument("FSLZ: sequence alphabet differs from params");
    x.validate();
    const std::size_t n = x.size();
    if (n < params.n_w) {
        throw std::invalid_argument("FSLZ: input of " + std::to_string(n) + " symbols is shorter than the window");
    }
    const std::size_t n_w = params.n_w;
    const std::size_t l_o = params.l_o;
    const unsigned beta = params.alphabet.beta();
    const unsigned offset_bits = ceil_log2(n_w);
    const auto sym = x.view();

    FslzEncoded enc;
    FslzStats& st = enc.stats;
    st.n_total = n;

    bitio::BitWriter out;
    bitio::FrameHeader{bitio::Codec::fslz, bitio::FrameHeader::kVersion,
                       static_cast<std::uint16_t>(params.alphabet.size()), static_cast<std::uint32_t>(n_w),
                       static_cast<std::uint32_t>(l_o), n}
        .write(out);
    st.header_bits = out.bit_length();

    detail::write_raw(out, sym.first(n_w), beta);

    st.m = (n - n_w) / l_o;
    const WordIndex words(sym, l_o);
    const auto occ = words.occurrences();
    const auto ids = words.ids();
    enc.blocks.reserve(st.m);

    for (std::size_t j = 0; j < st.m; ++j) {
        const std::size_t p = n_w + j * l_o;
        const auto positions = occ.of(ids[p]);
        const auto it = std::lower_bound(positions.begin(), positions.end(), p - n_w);
        // `positions` contains p itself, so *it <= p.
        if (*it < p) {
            const std::size_t offset = *it - (p - n_w);
            out.put_bit(true);
            out.write_fixed(offset, offset_bits);
            enc.blocks.push_back({p, true, offset});
            ++st.m1;
        } else {
            out.put_bit(false);
            detail::write_raw(out, sym.subspan(p, l_o), beta);
            enc.blocks.push_back({p, false, 0});
            ++st.m2;
        }
    }

    const std::size_t tail_start = n_w + st.m * l_o;
    st.tail = n - tail_start;
    detail::write_raw(out, sym.subspan(tail_start), beta);

    st.bits_total = out.bit_length();
    st.ratio = static_cast<double>(st.bits_total) / (static_cast<double>(beta) * static_cast<double>(n));
    enc.frame = std::move(out).release();
    return enc;
}

SymbolSequence fslz_decode(std::span<const std::uint8_t> frame) {
    bitio::BitReader in(frame);
    const auto h = bitio::FrameHeader::read(in);
    if (h.codec != bitio::Codec::fslz) throw DecodeError(DecodeErrc::bad_magic, "expected an FSLZ frame");

    const Alphabet alphabet(h.alphabet_size);
    const unsigned beta = alphabet.beta();
    const unsigned offset_bits = ceil_log2(h.n_w);
    const std::size_t n = h.n_total;
    const std::size_t n_w = h.n_w;
    const std::size_t l_o = h.l_o;

    // Every symbol costs at least one bit per block of l_o, bounding n.
    if ((n - n_w) / l_o > in.remaining()) {
        throw DecodeError(DecodeErrc::truncated, "frame too short for " + std::to_string(n) + " symbols");
    }

    SymbolSequence out{alphabet, {}};
    auto& s = out.symbols;
    s.reserve(std::min<std::size_t>(n, std::size_t{1} << 24));
    for (std::size_t i = 0; i < n_w; ++i) s.push_back(detail::read_raw(in, beta, h.alphabet_size));

    const std::size_t m = (n - n_w) / l_o;
    for (std::size_t j = 0; j < m; ++j) {
        const std::size_t p = s.size();
        if (in.get_bit()) {
            const auto offset = in.read_fixed(offset_bits);
            if (offset >= n_w) {
                throw DecodeError(DecodeErrc::offset_out_of_range,
                                  "offset " + std::to_string(offset) + " >= window " + std::to_string(n_w));
            }
            // Overlapping copies resolve left to right.
            std::size_t src = p - n_w + offset;
            for (std::size_t i = 0; i < l_o; ++i) {
                const Symbol c = s[src++];
                s.push_back(c);
            }
        } else {
            for (std::size_t i = 0; i < l_o; ++i) s.push_back(detail::read_raw(in, beta, h.alphabet_size));
        }
    }
    while (s.size() < n) s.push_back(detail::read_raw(in, beta, h.alphabet_size));
    detail::expect_end(in);
    return out;
}

RateDecomposition fslz_rate_report(const FslzStats& stats, const FslzParams& params) {
    const double n = static_cast<double>(stats.n_total);
    const double beta = params.alphabet.beta();
    RateDecomposition r;
    r.uncompressed = static_cast<double>(stats.n_total - stats.m * params.l_o) * beta / n;
    r.matched = static_cast<double>(stats.m1) * ceil_log2(params.n_w) / n;
    r.literal = static_cast<double>(stats.m2) * beta * static_cast<double>(params.l_o) / n;
    r.flags = static_cast<double>(stats.m) / n;
    r.block_count_bound = stats.m1 <= stats.m && stats.m * params.l_o < stats.n_total;
    return r;
}

}  // namespace lzlab::fslz
