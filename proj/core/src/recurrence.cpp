#include "lzlab/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lzlab/word_index.hpp"

namespace lzlab::recurrence {

void ReturnLaw::validate() const {
    if (!(c > 0.0)) throw std::invalid_argument("return law: c must be positive");
    if (!(epsilon > 0.0)) throw std::invalid_argument("return law: epsilon must be positive");
    if (family == Family::power && !(s > 0.0 && s < 1.0)) {
        throw std::invalid_argument("return law: power exponent s must lie in (0, 1)");
    }
}

double ReturnLaw::f(double n) const {
    switch (family) {
        case Family::linear: return n;
        case Family::log: return std::log2(n);
        case Family::power: return std::pow(n, s);
    }
    return n;
}

double ReturnLaw::f_inverse(double y) const {
    switch (family) {
        case Family::linear: return y;
        case Family::log: return std::exp2(y);
        case Family::power: return std::pow(y, 1.0 / s);
    }
    return y;
}

std::optional<std::uint64_t> first_return(std::span<const Symbol> x, std::size_t t, std::size_t n) {
    if (t > x.size() || n > x.size() - t) {
        throw std::out_of_range("first_return: t + n exceeds sequence length");
    }
    const auto word = x.subspan(t, n);
    for (std::size_t l = 1; l <= t; ++l) {
        if (std::equal(word.begin(), word.end(), x.begin() + static_cast<std::ptrdiff_t>(t - l))) return l;
    }
    return std::nullopt;
}

MatchLength match_length(std::span<const Symbol> x, std::size_t t, std::size_t window, std::size_t lookahead_cap) {
    if (t > x.size()) throw std::out_of_range("match_length: t beyond sequence end");
    if (window < 1) throw std::invalid_argument("match_length: window must be >= 1");
    if (window > t) throw std::out_of_range("match_length: window reaches before the sequence start");

    const std::size_t cap = std::min(lookahead_cap, x.size() - t);
    std::size_t best = 0;
    for (std::size_t k = t - window; k < t && best < cap; ++k) {
        std::size_t j = 0;
        while (j < cap && x[k + j] == x[t + j]) ++j;
        best = std::max(best, j);
    }
    return {best, best == cap};
}

Sandwich sandwich_check(std::span<const Symbol> x, std::size_t t, std::size_t m, std::size_t lookahead_cap) {
    const MatchLength lm = match_length(x, t, m, lookahead_cap);
    if (lm.capped) return Sandwich::indeterminate;
    const auto r_n = first_return(x, t, lm.length);
    const auto r_next = first_return(x, t, lm.length + 1);
    const bool lower = r_n.has_value() && *r_n <= m;
    const bool upper = !r_next.has_value() || *r_next > m;
    return lower && upper ? Sandwich::holds : Sandwich::violated;
}

double normalized_return(const ReturnLaw& law, const RecurrenceSample& sample) {
    if (!sample.r_n) throw std::invalid_argument("normalized_return: sample has no return time");
    const double denom = law.f(static_cast<double>(sample.n));
    if (!(denom > 0.0)) throw std::domain_error("normalized_return: f(n) is not positive");
    return std::log2(static_cast<double>(*sample.r_n)) / denom;
}

double normalized_match(const ReturnLaw& law, const RecurrenceSample& sample) {
    if (!sample.l_n) throw std::invalid_argument("normalized_match: sample has no match length");
    if (sample.capped) throw std::invalid_argument("normalized_match: match length is capped");
    if (*sample.l_n == 0) throw std::invalid_argument("normalized_match: zero match length");
    const double denom = law.f(static_cast<double>(*sample.l_n));
    if (!(denom > 0.0)) throw std::domain_error("normalized_match: f(l_n) is not positive");
    return std::log2(static_cast<double>(sample.n)) / denom;
}

RecurrenceSample sample_at(std::span<const Symbol> x, std::size_t t, std::size_t n, std::size_t lookahead_cap) {
    RecurrenceSample s;
    s.t = t;
    s.n = n;
    if (t + n <= x.size()) s.r_n = first_return(x, t, n);
    if (n >= 1 && n <= t) {
        const MatchLength ml = match_length(x, t, n, lookahead_cap);
        s.l_n = ml.length;
        s.capped = ml.capped;
    }
    return s;
}

std::vector<std::uint64_t> first_return_profile(std::span<const Symbol> x, std::size_t n) {
    if (n == 0) throw std::invalid_argument("first_return_profile: word length must be >= 1");
    return WordIndex(x, n).first_returns();
}

MuGEstimate mu_g_estimate(std::span<const Symbol> x, std::size_t l_o, std::size_t n_w, std::size_t stride) {
    if (l_o < 1 || n_w < 1 || stride < 1) throw std::invalid_argument("mu_g_estimate: l_o, n_w, stride must be >= 1");
    if (x.size() < n_w + l_o + stride) {
        throw std::invalid_argument("mu_g_estimate: sequence shorter than n_w + l_o + stride");
    }
    // A start in [t - n_w, t) matching l_o symbols exists iff R_{l_o}(t) <= n_w.
    const auto returns = first_return_profile(x, l_o);
    MuGEstimate est{l_o, n_w, 0, 0, 0.0};
    for (std::size_t t = n_w; t + l_o <= x.size(); t += stride) {
        ++est.trials;
        if (returns[t] == 0 || returns[t] > n_w) ++est.misses;
    }
    est.mu_hat = static_cast<double>(est.misses) / static_cast<double>(est.trials);
    return est;
}

double median(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("median of an empty sample");
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (values.size() % 2 == 1) return *mid;
    const double upper = *mid;
    const double lower = *std::max_element(values.begin(), mid);
    return 0.5 * (lower + upper);
}

}  // namespace lzlab::recurrence
