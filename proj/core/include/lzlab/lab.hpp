#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lzlab/recurrence.hpp"
#include "lzlab/sequence.hpp"
#include "lzlab/sources.hpp"

namespace lzlab::lab {

/// Complete LZ78 phrases after each requested prefix length. The phrase in
/// progress at a prefix boundary is not counted.
std::vector<std::size_t> lz78_phrase_count(std::span<const Symbol> x, std::span<const std::size_t> prefixes);
std::size_t lz78_phrase_count(std::span<const Symbol> x);

/// Source descriptors accepted by the sweep and the CLI:
///   rotation:golden | rotation:sqrt2 | rotation:<theta in (0,1)>
///   periodic:<digits>   e.g. periodic:01
///   iid:<p0>,<p1>,...   e.g. iid:0.5,0.5
/// Rotations take optional ";x0=<v>;threshold=<v>" suffixes.
struct SourceSpec {
    enum class Kind { rotation, periodic, iid };
    Kind kind = Kind::rotation;
    std::string id;
    sources::RotationConfig rotation;
    SymbolSequence pattern;
    std::vector<double> probabilities;
};

SourceSpec parse_source(const std::string& text);
SymbolSequence make_sequence(const SourceSpec& spec, std::size_t n, std::uint64_t seed);

struct SweepConfig {
    std::string source = "rotation:golden";
    bool run_fslz = true;
    bool run_swlz = true;
    std::vector<std::size_t> windows;
    recurrence::ReturnLaw law = recurrence::ReturnLaw::log(1.0, 0.25);
    std::size_t n_total_factor = 64;
    std::size_t n_total_min = std::size_t{1} << 14;
    /// Fixed N for every row instead of the factor rule.
    std::optional<std::size_t> n_total;
    std::uint64_t seed = 1;

    std::size_t n_total_for(std::size_t n_w) const;
};

struct SweepRow {
    std::string source_id;
    std::size_t n_w = 0;
    std::size_t l_o = 0;
    std::size_t n_total = 0;
    std::optional<double> ratio_fslz;
    std::optional<double> ratio_swlz;
    /// Bits after the raw window per coded symbol, (bits - header - n_w beta)
    /// / (beta (N - n_w)): the N -> infinity limit of the ratio.
    std::optional<double> rate_fslz;
    std::optional<double> rate_swlz;
    double mu_hat = 0.0;
    double bad_fraction = 0.0;
    double wall_time = 0.0;
};

/// One row per window size, in grid order. Every encode is decoded and
/// compared; a mismatch throws std::logic_error.
std::vector<SweepRow> sweep(const SweepConfig& cfg);

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, bool with_timing);

enum class FitModel {
    power_log,  // ratio = C * log2(n_w) / n_w^a
    poly_log,   // ratio = C / log2(n_w)^k
};

struct FitResult {
    double c_coef = 0.0;
    double exponent = 0.0;  // a for power_log, k for poly_log
    double residual = 0.0;  // RMS of log2-domain residuals
    bool poor = false;      // residual above kPoorFitResidual
};

constexpr double kPoorFitResidual = 0.01;

struct RatePoint {
    double n_w = 0.0;
    double ratio = 0.0;
};

/// Least squares in the log2 domain. Needs >= 3 points with at least 3
/// distinct window sizes, all ratios positive.
FitResult fit_rate(std::span<const RatePoint> points, FitModel model);

/// Reads (n_w, column) pairs from a sweep CSV. Rows with an empty value are skipped.
std::vector<RatePoint> read_rate_points(std::istream& csv, const std::string& column);

}  // namespace lzlab::lab
