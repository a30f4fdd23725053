#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lzlab/sequence.hpp"

namespace lzlab::sources {

/// Irrational rotation T(x) = x + theta mod 1 in 128-bit fixed point: a
/// value v stands for v / 2^128. Addition wraps, so the quantized orbit is
/// computed exactly. Symbol 0 is emitted while the orbit point lies in
/// E = [0, threshold).
struct RotationConfig {
    u128 theta_fp = 0;
    u128 x0_fp = 0;
    u128 threshold_fp = u128(1) << 127;

    /// Throws std::invalid_argument on theta = 0 or threshold = 0.
    void validate() const;
};

/// Golden-ratio conjugate (sqrt(5) - 1) / 2, truncated to 128 fractional bits.
u128 golden_theta();
/// sqrt(2) - 1, truncated to 128 fractional bits.
u128 sqrt2_theta();
/// Nearest 128-bit fraction to a double in [0, 1). Low bits beyond the
/// double's mantissa are zero.
u128 fraction_from_double(double v);
double fraction_to_double(u128 v);

Symbol rotation_symbol(const RotationConfig& cfg, std::uint64_t i);
SymbolSequence generate_rotation(const RotationConfig& cfg, std::size_t n);

/// Repeats `pattern` to length n. Throws on an empty pattern.
SymbolSequence generate_periodic(const SymbolSequence& pattern, std::size_t n);

/// i.i.d. symbols drawn by inverse-CDF sampling from a seeded mt19937_64.
/// The alphabet size is p.size(). Output depends only on (p, seed, n).
SymbolSequence generate_iid(std::span<const double> p, std::uint64_t seed, std::size_t n);

struct DiophantineProfile {
    /// a_1, a_2, ... of theta = [0; a_1, a_2, ...].
    std::vector<u128> partial_quotients;
    /// q_1, q_2, ... with q_0 = 1, q_{-1} = 0.
    std::vector<u128> convergent_denominators;
    /// ||q_k theta|| as an exact 128-bit fraction.
    std::vector<u128> distances_fp;
    std::vector<double> distances;
    /// Every computed partial quotient is at most the requested bound.
    bool bounded_quotients_up_to_depth = false;
    /// The expansion ended (theta is a dyadic rational) before `depth` terms.
    bool terminated = false;
};

/// Continued-fraction diagnostics of the quantized theta. Bounded partial
/// quotients mark theta as badly approximable, the eta(theta) = 1 regime.
DiophantineProfile diophantine_profile(u128 theta_fp, std::size_t depth, u128 quotient_bound = 16);

}  // namespace lzlab::sources
