#include "lzlab/lab.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "lzlab/fslz.hpp"
#include "lzlab/swlz.hpp"

namespace lzlab::lab {

std::vector<std::size_t> lz78_phrase_count(std::span<const Symbol> x, std::span<const std::size_t> prefixes) {
    for (std::size_t p : prefixes) {
        if (p > x.size()) throw std::out_of_range("lz78_phrase_count: prefix beyond sequence end");
    }
    // Trie edges keyed by (node, symbol); node 0 is the root.
    std::unordered_map<std::uint64_t, std::uint32_t> children;
    std::uint32_t nodes = 1;
    std::uint32_t cur = 0;
    std::size_t complete = 0;

    std::vector<std::size_t> order(prefixes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return prefixes[a] < prefixes[b]; });
    std::vector<std::size_t> counts(prefixes.size());
    std::size_t next = 0;

    for (std::size_t i = 0; i <= x.size(); ++i) {
        while (next < order.size() && prefixes[order[next]] == i) counts[order[next++]] = complete;
        if (i == x.size()) break;
        const std::uint64_t key = (std::uint64_t{cur} << 8) | x[i];
        const auto it = children.find(key);
        if (it != children.end()) {
            cur = it->second;
        } else {
            children.emplace(key, nodes++);
            cur = 0;
            ++complete;
        }
    }
    return counts;
}

std::size_t lz78_phrase_count(std::span<const Symbol> x) {
    const std::size_t whole = x.size();
    return lz78_phrase_count(x, std::span<const std::size_t>(&whole, 1)).front();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

double parse_double(const std::string& s, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
    return v;
}

// Decimal fraction in [0, 1) or exact 128-bit hex (0x...).
u128 parse_fraction(const std::string& s, const char* what) {
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
        const std::string digits = s.substr(2);
        if (digits.empty() || digits.size() > 32) throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
        u128 v = 0;
        for (char c : digits) {
            int d = 0;
            if (c >= '0' && c <= '9') d = c - '0';
            else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
            else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
            else throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
            v = (v << 4) | static_cast<unsigned>(d);
        }
        return v;
    }
    return sources::fraction_from_double(parse_double(s, what));
}

}  // namespace

SourceSpec parse_source(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("source '" + text + "' lacks a kind prefix");
    const std::string kind = text.substr(0, colon);
    const auto fields = split(text.substr(colon + 1), ';');
    if (fields.empty() || fields.front().empty()) throw std::invalid_argument("source '" + text + "' lacks a value");

    SourceSpec spec;
    spec.id = text;
    if (kind == "rotation") {
        spec.kind = SourceSpec::Kind::rotation;
        const std::string& theta = fields.front();
        if (theta == "golden") {
            spec.rotation.theta_fp = sources::golden_theta();
        } else if (theta == "sqrt2") {
            spec.rotation.theta_fp = sources::sqrt2_theta();
        } else {
            spec.rotation.theta_fp = parse_fraction(theta, "theta");
        }
        for (std::size_t i = 1; i < fields.size(); ++i) {
            const auto eq = fields[i].find('=');
            const std::string key = fields[i].substr(0, eq);
            const std::string value = eq == std::string::npos ? "" : fields[i].substr(eq + 1);
            if (key == "x0") {
                spec.rotation.x0_fp = parse_fraction(value, "x0");
            } else if (key == "threshold") {
                spec.rotation.threshold_fp = parse_fraction(value, "threshold");
            } else {
                throw std::invalid_argument("unknown rotation option '" + fields[i] + "'");
            }
        }
        spec.rotation.validate();
    } else if (kind == "periodic") {
        spec.kind = SourceSpec::Kind::periodic;
        if (fields.size() != 1) throw std::invalid_argument("periodic source takes no options");
        const std::string& digits = fields.front();
        unsigned size = 2;
        for (char c : digits) {
            if (c >= '0' && c <= '9') size = std::max(size, static_cast<unsigned>(c - '0') + 1);
        }
        spec.pattern = sequence_from_digits(digits, size);
    } else if (kind == "iid") {
        spec.kind = SourceSpec::Kind::iid;
        if (fields.size() != 1) throw std::invalid_argument("iid source takes no options");
        for (const auto& p : split(fields.front(), ',')) spec.probabilities.push_back(parse_double(p, "probability"));
        // Validate now rather than at generation time.
        sources::generate_iid(spec.probabilities, 0, 0);
    } else {
        throw std::invalid_argument("unknown source kind '" + kind + "'");
    }
    return spec;
}

SymbolSequence make_sequence(const SourceSpec& spec, std::size_t n, std::uint64_t seed) {
    switch (spec.kind) {
        case SourceSpec::Kind::rotation: return sources::generate_rotation(spec.rotation, n);
        case SourceSpec::Kind::periodic: return sources::generate_periodic(spec.pattern, n);
        case SourceSpec::Kind::iid: return sources::generate_iid(spec.probabilities, seed, n);
    }
    throw std::logic_error("unreachable source kind");
}

std::size_t SweepConfig::n_total_for(std::size_t n_w) const {
    if (n_total) return *n_total;
    return std::max(n_total_factor * n_w, n_total_min);
}

namespace {

double body_rate(std::size_t bits_total, std::size_t header_bits, std::size_t n_w, std::size_t n, unsigned beta) {
    if (n == n_w) return 0.0;
    const double body = static_cast<double>(bits_total - header_bits - n_w * beta);
    return body / (static_cast<double>(beta) * static_cast<double>(n - n_w));
}

}  // namespace

std::vector<SweepRow> sweep(const SweepConfig& cfg) {
    if (cfg.windows.empty()) throw std::invalid_argument("sweep: empty window grid");
    if (!cfg.run_fslz && !cfg.run_swlz) throw std::invalid_argument("sweep: no codec selected");
    if (cfg.n_total_factor < 2) throw std::invalid_argument("sweep: N factor must be >= 2");
    for (std::size_t n_w : cfg.windows) {
        if (n_w < 2) throw std::invalid_argument("sweep: window sizes must be >= 2");
        if (cfg.n_total_for(n_w) < 2 * n_w) throw std::invalid_argument("sweep: N must be at least 2 n_w");
    }
    cfg.law.validate();
    const SourceSpec spec = parse_source(cfg.source);

    std::vector<SweepRow> rows;
    for (std::size_t n_w : cfg.windows) {
        const auto start = std::chrono::steady_clock::now();
        SweepRow row;
        row.source_id = spec.id;
        row.n_w = n_w;
        row.n_total = cfg.n_total_for(n_w);
        row.l_o = fslz::choose_match_length(cfg.law, n_w);

        const SymbolSequence x = make_sequence(spec, row.n_total, cfg.seed);
        const unsigned beta = x.alphabet.beta();
        if (cfg.run_fslz) {
            const auto enc = fslz::fslz_encode(x, {n_w, row.l_o, x.alphabet});
            if (fslz::fslz_decode(enc.frame) != x) throw std::logic_error("sweep: FSLZ round trip failed");
            row.ratio_fslz = enc.stats.ratio;
            row.rate_fslz = body_rate(enc.stats.bits_total, enc.stats.header_bits, n_w, row.n_total, beta);
        }
        if (cfg.run_swlz) {
            const auto enc = swlz::swlz_encode(x, {n_w, x.alphabet});
            if (swlz::swlz_decode(enc.frame) != x) throw std::logic_error("sweep: SWLZ round trip failed");
            row.ratio_swlz = enc.stats.ratio;
            row.rate_swlz = body_rate(enc.stats.bits_total, enc.stats.header_bits, n_w, row.n_total, beta);
        }
        row.mu_hat = recurrence::mu_g_estimate(x.view(), row.l_o, n_w, row.l_o).mu_hat;
        row.bad_fraction = swlz::bad_interval_fraction(x.view(), row.l_o, n_w).fraction;
        row.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

void put_optional(std::ostream& out, const std::optional<double>& v) {
    if (v) out << *v;
}

}  // namespace

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows, bool with_timing) {
    const auto old_precision = out.precision(12);
    out << "source_id,n_w,l_o,n_total,ratio_fslz,ratio_swlz,rate_fslz,rate_swlz,mu_hat,bad_fraction";
    if (with_timing) out << ",wall_time";
    out << '\n';
    for (const auto& r : rows) {
        out << r.source_id << ',' << r.n_w << ',' << r.l_o << ',' << r.n_total << ',';
        put_optional(out, r.ratio_fslz);
        out << ',';
        put_optional(out, r.ratio_swlz);
        out << ',';
        put_optional(out, r.rate_fslz);
        out << ',';
        put_optional(out, r.rate_swlz);
        out << ',' << r.mu_hat << ',' << r.bad_fraction;
        if (with_timing) out << ',' << r.wall_time;
        out << '\n';
    }
    out.precision(old_precision);
}

FitResult fit_rate(std::span<const RatePoint> points, FitModel model) {
    if (points.size() < 3) throw std::invalid_argument("fit_rate: need at least 3 points");
    std::vector<double> u;
    std::vector<double> y;
    for (const auto& p : points) {
        if (!(p.ratio > 0.0)) throw std::invalid_argument("fit_rate: ratios must be positive");
        if (!(p.n_w >= 2.0)) throw std::invalid_argument("fit_rate: window sizes must be >= 2");
        const double lg = std::log2(p.n_w);
        if (model == FitModel::power_log) {
            u.push_back(lg);
            y.push_back(std::log2(p.ratio) - std::log2(lg));
        } else {
            if (!(lg > 1.0)) throw std::invalid_argument("fit_rate: poly_log model needs n_w > 2");
            u.push_back(std::log2(lg));
            y.push_back(std::log2(p.ratio));
        }
    }
    std::vector<double> distinct = u;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) throw std::invalid_argument("fit_rate: need at least 3 distinct window sizes");

    const double n = static_cast<double>(u.size());
    const double u_mean = std::accumulate(u.begin(), u.end(), 0.0) / n;
    const double y_mean = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double suu = 0.0;
    double suy = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        suu += (u[i] - u_mean) * (u[i] - u_mean);
        suy += (u[i] - u_mean) * (y[i] - y_mean);
    }
    if (!(suu > 0.0)) throw std::invalid_argument("fit_rate: degenerate design matrix");
    const double slope = suy / suu;
    const double intercept = y_mean - slope * u_mean;

    double sse = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        const double e = y[i] - (intercept + slope * u[i]);
        sse += e * e;
    }
    FitResult fit;
    fit.c_coef = std::exp2(intercept);
    fit.exponent = -slope;
    fit.residual = std::sqrt(sse / n);
    fit.poor = fit.residual > kPoorFitResidual;
    return fit;
}

std::vector<RatePoint> read_rate_points(std::istream& csv, const std::string& column) {
    std::string line;
    if (!std::getline(csv, line)) throw std::invalid_argument("fit: empty CSV input");
    const auto header = split(line, ',');
    const auto find = [&](const std::string& name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) throw std::invalid_argument("fit: CSV has no column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t nw_col = find("n_w");
    const std::size_t value_col = find(column);

    std::vector<RatePoint> points;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != header.size()) throw std::invalid_argument("fit: ragged CSV row '" + line + "'");
        if (cells[value_col].empty()) continue;
        points.push_back({parse_double(cells[nw_col], "n_w"), parse_double(cells[value_col], column.c_str())});
    }
    return points;
}

}  // namespace lzlab::lab
