#include "lzlab/sources.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace lzlab::sources {

namespace {

using boost::multiprecision::uint256_t;

// floor(sqrt(k) * 2^128) via integer square root of k * 2^256.
uint256_t scaled_sqrt(unsigned k) {
    using boost::multiprecision::uint512_t;
    const uint512_t v = uint512_t(k) << 256;
    return uint256_t(boost::multiprecision::sqrt(v));
}

u128 low_u128(const uint256_t& v) {
    const uint256_t mask = (uint256_t(1) << 128) - 1;
    const uint256_t low = v & mask;
    const auto hi = static_cast<std::uint64_t>(low >> 64);
    const auto lo = static_cast<std::uint64_t>(low & 0xFFFFFFFFFFFFFFFFull);
    return (u128(hi) << 64) | lo;
}

u128 circle_distance(u128 v) {
    const u128 neg = u128(0) - v;
    return v < neg ? v : neg;
}

}  // namespace

void RotationConfig::validate() const {
    if (theta_fp == 0) throw std::invalid_argument("rotation: theta must be nonzero");
    if (threshold_fp == 0) throw std::invalid_argument("rotation: threshold must be nonzero (empty cell E)");
}

u128 golden_theta() {
    // (sqrt(5) - 1) / 2 = (sqrt(5) * 2^128 - 2^128) / 2 / 2^128
    const uint256_t s = scaled_sqrt(5);
    return low_u128((s - (uint256_t(1) << 128)) >> 1);
}

u128 sqrt2_theta() {
    const uint256_t s = scaled_sqrt(2);
    return low_u128(s - (uint256_t(1) << 128));
}

u128 fraction_from_double(double v) {
    if (!(v >= 0.0 && v < 1.0)) throw std::invalid_argument("fraction must lie in [0, 1)");
    return static_cast<u128>(std::ldexp(v, 128));
}

double fraction_to_double(u128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    return std::ldexp(static_cast<double>(hi), -64) + std::ldexp(static_cast<double>(lo), -128);
}

Symbol rotation_symbol(const RotationConfig& cfg, std::uint64_t i) {
    const u128 point = cfg.x0_fp + u128(i) * cfg.theta_fp;
    return point < cfg.threshold_fp ? Symbol{0} : Symbol{1};
}

SymbolSequence generate_rotation(const RotationConfig& cfg, std::size_t n) {
    cfg.validate();
    SymbolSequence seq;
    seq.symbols.resize(n);
    u128 point = cfg.x0_fp;
    for (std::size_t i = 0; i < n; ++i) {
        seq.symbols[i] = point < cfg.threshold_fp ? 0 : 1;
        point += cfg.theta_fp;
    }
    return seq;
}

SymbolSequence generate_periodic(const SymbolSequence& pattern, std::size_t n) {
    if (pattern.symbols.empty()) throw std::invalid_argument("periodic source: empty pattern");
    pattern.validate();
    SymbolSequence seq{pattern.alphabet, {}};
    seq.symbols.resize(n);
    const std::size_t period = pattern.symbols.size();
    for (std::size_t i = 0; i < n; ++i) seq.symbols[i] = pattern.symbols[i % period];
    return seq;
}

SymbolSequence generate_iid(std::span<const double> p, std::uint64_t seed, std::size_t n) {
    if (p.size() < 2 || p.size() > Alphabet::kMaxSize) {
        throw std::invalid_argument("iid source: distribution needs 2..256 entries");
    }
    for (double pi : p) {
        if (!(pi >= 0.0)) throw std::invalid_argument("iid source: negative or NaN probability");
    }
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    if (std::abs(total - 1.0) > 1e-12) throw std::invalid_argument("iid source: probabilities must sum to 1");

    std::vector<double> cdf(p.size());
    std::partial_sum(p.begin(), p.end(), cdf.begin());
    cdf.back() = 1.0;

    SymbolSequence seq{Alphabet(static_cast<unsigned>(p.size())), {}};
    seq.symbols.resize(n);
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        // 53-bit uniform in [0, 1); std distributions are not portable bit-for-bit.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const auto s = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        seq.symbols[i] = static_cast<Symbol>(s);
    }
    return seq;
}

DiophantineProfile diophantine_profile(u128 theta_fp, std::size_t depth, u128 quotient_bound) {
    if (depth < 1) throw std::invalid_argument("diophantine_profile: depth must be >= 1");
    if (theta_fp == 0) throw std::invalid_argument("diophantine_profile: theta must be nonzero");

    DiophantineProfile prof;
    prof.bounded_quotients_up_to_depth = true;

    // theta = 1/2^128 has first quotient 2^128, which does not fit.
    if (theta_fp == 1) {
        prof.terminated = true;
        prof.bounded_quotients_up_to_depth = false;
        return prof;
    }

    // Euclid on (2^128, theta). The first step is split because 2^128 itself
    // is not representable: 2^128 = (2^128 - theta) + theta.
    const u128 complement = u128(0) - theta_fp;
    u128 a = complement / theta_fp + 1;
    u128 num = theta_fp;
    u128 den = complement % theta_fp;

    u128 q_prev = 0;  // q_{-1}
    u128 q = 1;       // q_0
    for (std::size_t k = 0; k < depth; ++k) {
        u128 next = 0;
        if (__builtin_mul_overflow(a, q, &next) || __builtin_add_overflow(next, q_prev, &next)) {
            prof.terminated = true;
            break;
        }
        q_prev = q;
        q = next;
        prof.partial_quotients.push_back(a);
        prof.convergent_denominators.push_back(q);
        const u128 dist = circle_distance(q * theta_fp);
        prof.distances_fp.push_back(dist);
        prof.distances.push_back(fraction_to_double(dist));
        if (a > quotient_bound) prof.bounded_quotients_up_to_depth = false;

        if (den == 0) {
            prof.terminated = true;
            break;
        }
        a = num / den;
        const u128 rem = num % den;
        num = den;
        den = rem;
    }
    return prof;
}

}  // namespace lzlab::sources
