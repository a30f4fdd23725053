#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lzlab/sequence.hpp"

namespace lzlab::recurrence {

/// Growth law log2 R_n ~ c * f(n) with its slack epsilon. f is one of
/// n (positive entropy, c = H), log2 n (irrational rotations) or n^s.
struct ReturnLaw {
    enum class Family { linear, log, power };

    Family family = Family::log;
    double c = 1.0;
    double epsilon = 0.25;
    double s = 0.5;  // exponent of the power family only

    static ReturnLaw linear(double c, double epsilon = 0.25) { return {Family::linear, c, epsilon, 0.5}; }
    static ReturnLaw log(double c, double epsilon = 0.25) { return {Family::log, c, epsilon, 0.5}; }
    static ReturnLaw power(double s, double c, double epsilon = 0.25) { return {Family::power, c, epsilon, s}; }

    /// Throws std::invalid_argument when c, epsilon or s are out of range.
    void validate() const;
    double f(double n) const;
    double f_inverse(double y) const;
};

struct RecurrenceSample {
    std::size_t t = 0;
    std::size_t n = 0;
    std::optional<std::uint64_t> r_n;
    std::optional<std::uint64_t> l_n;
    bool capped = false;
};

struct MatchLength {
    std::size_t length = 0;
    bool capped = false;
};

/// R_n at reference index t over the history x[0..t): the least l >= 1 with
/// x[t..t+n) == x[t-l..t-l+n). Absent when the word never occurred before t.
std::optional<std::uint64_t> first_return(std::span<const Symbol> x, std::size_t t, std::size_t n);

/// L at reference index t against starts in [t - window, t). Copies may run
/// past t. The lookahead is min(cap, |x| - t); `capped` reports reaching it.
MatchLength match_length(std::span<const Symbol> x, std::size_t t, std::size_t window, std::size_t lookahead_cap);

enum class Sandwich { holds, violated, indeterminate };

/// With n = L_m(t): R_n <= m and (R_{n+1} > m or absent). Indeterminate
/// when the match length hit its lookahead cap.
Sandwich sandwich_check(std::span<const Symbol> x, std::size_t t, std::size_t m,
                        std::size_t lookahead_cap = static_cast<std::size_t>(-1));

/// log2(r_n) / f(n).
double normalized_return(const ReturnLaw& law, const RecurrenceSample& sample);
/// log2(n) / f(l_n); requires an uncapped l_n >= 1.
double normalized_match(const ReturnLaw& law, const RecurrenceSample& sample);

/// Fills r_n (word length n) and l_n (window n) at reference index t.
RecurrenceSample sample_at(std::span<const Symbol> x, std::size_t t, std::size_t n, std::size_t lookahead_cap);

/// R_n for every reference index t in [0, |x| - n], 0 where absent.
/// Exact and O(|x| log n); agrees with first_return at every t.
std::vector<std::uint64_t> first_return_profile(std::span<const Symbol> x, std::size_t n);

struct MuGEstimate {
    std::size_t l_o = 0;
    std::size_t n_w = 0;
    std::size_t trials = 0;
    std::size_t misses = 0;
    double mu_hat = 0.0;
};

/// Fraction of reference points t = n_w, n_w + stride, ... (t + l_o <= |x|)
/// whose next l_o symbols have no copy starting in the previous n_w symbols.
MuGEstimate mu_g_estimate(std::span<const Symbol> x, std::size_t l_o, std::size_t n_w, std::size_t stride);

/// Median of a non-empty sample (mean of the middle pair for even sizes).
double median(std::vector<double> values);

}  // namespace lzlab::recurrence
