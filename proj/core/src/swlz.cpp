#include "lzlab/swlz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "frame_util.hpp"
#include "lzlab/word_index.hpp"

namespace lzlab::swlz {

using bitio::DecodeErrc;
using bitio::DecodeError;

namespace {

constexpr auto kNone = std::numeric_limits<std::uint32_t>::max();

std::size_t common_prefix(std::span<const Symbol> x, std::size_t a, std::size_t b, std::size_t cap) {
    const auto first = x.begin() + static_cast<std::ptrdiff_t>(b);
    const auto last = first + static_cast<std::ptrdiff_t>(cap);
    const auto [stop, other] = std::mismatch(first, last, x.begin() + static_cast<std::ptrdiff_t>(a));
    return static_cast<std::size_t>(stop - first);
}

void check_query(std::span<const Symbol> x, std::size_t t, std::size_t n_w, std::size_t cap) {
    if (t < n_w) throw std::out_of_range("longest_match: t must be >= n_w");
    if (t > x.size() || cap > x.size() - t) throw std::out_of_range("longest_match: lookahead beyond sequence end");
}

}  // namespace

void SwlzParams::validate() const {
    if (n_w < 2) throw std::invalid_argument("SWLZ: window must be >= 2");
    if (n_w > std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("SWLZ: window exceeds 32 bits");
}

Match longest_match_naive(std::span<const Symbol> x, std::size_t t, std::size_t n_w, std::size_t cap) {
    check_query(x, t, n_w, cap);
    Match best;
    for (std::size_t k = t - n_w; k < t && best.length < cap; ++k) {
        const std::size_t len = common_prefix(x, k, t, cap);
        if (len > best.length) best = {k - (t - n_w), len};
    }
    return best;
}

MatchFinder::MatchFinder(std::span<const Symbol> x, std::size_t n_w, unsigned alphabet_size) : x_(x), n_w_(n_w) {
    if (n_w < 1) throw std::invalid_argument("MatchFinder: window must be >= 1");
    if (alphabet_size < 2) throw std::invalid_argument("MatchFinder: alphabet size must be >= 2");
    // Aim for about four window starts per q-gram on uniform data.
    const double grams = std::floor(std::log2(static_cast<double>(n_w)) / std::log2(static_cast<double>(alphabet_size)));
    q_ = static_cast<std::size_t>(std::max(1.0, grams - 2.0));

    if (x.size() < q_) return;
    const WordIndex grams_index(x, q_);
    const auto ids = grams_index.ids();
    std::vector<std::uint32_t> last(grams_index.distinct(), kNone);
    prev_.resize(ids.size());
    for (std::size_t k = 0; k < ids.size(); ++k) {
        prev_[k] = last[ids[k]];
        last[ids[k]] = static_cast<std::uint32_t>(k);
    }
}

Match MatchFinder::find(std::size_t t, std::size_t cap) const {
    check_query(x_, t, n_w_, cap);
    if (cap < q_) return longest_match_naive(x_, t, n_w_, cap);

    const std::size_t lo = t - n_w_;
    scratch_.clear();
    for (std::uint32_t c = prev_[t]; c != kNone && c >= lo; c = prev_[c]) scratch_.push_back(c);
    // No start shares the next q symbols, so every match is shorter than q.
    if (scratch_.empty()) return longest_match_naive(x_, t, n_w_, q_ - 1);

    Match best;
    for (auto it = scratch_.rbegin(); it != scratch_.rend() && best.length < cap; ++it) {
        const std::size_t c = *it;
        if (x_[c + best.length] != x_[t + best.length]) continue;
        const std::size_t len = common_prefix(x_, c, t, cap);
        if (len > best.length) best = {c - lo, len};
    }
    return best;
}

PhraseCost phrase_cost(std::size_t length, bool match_available, std::size_t n_w, unsigned beta) {
    if (length < 1) throw std::invalid_argument("phrase_cost: length must be >= 1");
    const std::size_t gamma = bitio::elias_gamma_length(length);
    const std::size_t literal = gamma + static_cast<std::size_t>(beta) * length;
    if (!match_available) return {literal, PhraseMode::literal};
    const std::size_t match = gamma + ceil_log2(n_w);
    return match <= literal ? PhraseCost{match, PhraseMode::match} : PhraseCost{literal, PhraseMode::literal};
}

SwlzEncoded swlz_encode(const SymbolSequence& x, const SwlzParams& params) {
    params.validate();
    if (x.alphabet != params.alphabet) throw std::invalid_argument("SWLZ: sequence alphabet differs from params");
    x.validate();
    const std::size_t n = x.size();
    if (n < params.n_w) {
        throw std::invalid_argument("SWLZ: input of " + std::to_string(n) + " symbols is shorter than the window");
    }
    const std::size_t n_w = params.n_w;
    const unsigned beta = params.alphabet.beta();
    const unsigned offset_bits = ceil_log2(n_w);
    const auto sym = x.view();

    SwlzEncoded enc;
    SwlzStats& st = enc.stats;
    st.n_total = n;

    bitio::BitWriter out;
    bitio::FrameHeader{bitio::Codec::swlz, bitio::FrameHeader::kVersion,
                       static_cast<std::uint16_t>(params.alphabet.size()), static_cast<std::uint32_t>(n_w), 0, n}
        .write(out);
    st.header_bits = out.bit_length();
    detail::write_raw(out, sym.first(n_w), beta);

    const MatchFinder finder(sym, n_w, params.alphabet.size());
    std::size_t t = n_w;
    while (t < n) {
        const Match m = finder.find(t, n - t);
        Phrase ph;
        ph.start = t;
        ph.length = std::max<std::size_t>(m.length, 1);
        const PhraseCost cost = phrase_cost(ph.length, m.length > 0, n_w, beta);
        ph.mode = cost.mode;
        ph.cost = cost.bits;

        out.put_bit(ph.mode == PhraseMode::match);
        bitio::elias_gamma_encode(out, ph.length);
        if (ph.mode == PhraseMode::match) {
            ph.offset = m.offset;
            out.write_fixed(m.offset, offset_bits);
            ++st.matched;
        } else {
            detail::write_raw(out, sym.subspan(t, ph.length), beta);
            ++st.literal;
        }
        enc.phrases.push_back(ph);
        t += ph.length;
    }

    st.c_n = enc.phrases.size();
    st.bits_total = out.bit_length();
    st.ratio = static_cast<double>(st.bits_total) / (static_cast<double>(beta) * static_cast<double>(n));
    enc.frame = std::move(out).release();
    return enc;
}

SymbolSequence swlz_decode(std::span<const std::uint8_t> frame) {
    bitio::BitReader in(frame);
    const auto h = bitio::FrameHeader::read(in);
    if (h.codec != bitio::Codec::swlz) throw DecodeError(DecodeErrc::bad_magic, "expected an SWLZ frame");

    const Alphabet alphabet(h.alphabet_size);
    const unsigned beta = alphabet.beta();
    const unsigned offset_bits = ceil_log2(h.n_w);
    const std::size_t n = h.n_total;
    const std::size_t n_w = h.n_w;

    SymbolSequence out{alphabet, {}};
    auto& s = out.symbols;
    s.reserve(std::min<std::size_t>(n, std::size_t{1} << 24));
    for (std::size_t i = 0; i < n_w; ++i) s.push_back(detail::read_raw(in, beta, h.alphabet_size));

    while (s.size() < n) {
        const bool is_match = in.get_bit();
        const std::uint64_t length = bitio::elias_gamma_decode(in);
        if (length > n - s.size()) {
            throw DecodeError(DecodeErrc::length_out_of_range, "phrase of " + std::to_string(length) +
                                                                   " symbols with " + std::to_string(n - s.size()) +
                                                                   " remaining");
        }
        if (is_match) {
            const auto offset = in.read_fixed(offset_bits);
            if (offset >= n_w) {
                throw DecodeError(DecodeErrc::offset_out_of_range,
                                  "offset " + std::to_string(offset) + " >= window " + std::to_string(n_w));
            }
            std::size_t src = s.size() - n_w + offset;
            for (std::uint64_t i = 0; i < length; ++i) {
                const Symbol c = s[src++];
                s.push_back(c);
            }
        } else {
            for (std::uint64_t i = 0; i < length; ++i) s.push_back(detail::read_raw(in, beta, h.alphabet_size));
        }
    }
    detail::expect_end(in);
    return out;
}

BadIntervals bad_interval_fraction(std::span<const Symbol> x, std::size_t l_o, std::size_t n_w) {
    if (l_o < 1 || l_o >= n_w) throw std::invalid_argument("bad_interval_fraction: need 1 <= l_o < n_w");
    if (x.size() < n_w + l_o) throw std::invalid_argument("bad_interval_fraction: sequence shorter than n_w + l_o");
    const std::size_t lookback = n_w - l_o;
    const auto returns = WordIndex(x, l_o).first_returns();
    BadIntervals res;
    res.intervals = x.size() - l_o - n_w + 1;
    for (std::size_t p = n_w; p + l_o <= x.size(); ++p) {
        if (returns[p] == 0 || returns[p] > lookback) ++res.bad;
    }
    res.fraction = static_cast<double>(res.bad) / static_cast<double>(res.intervals);
    return res;
}

}  // namespace lzlab::swlz
