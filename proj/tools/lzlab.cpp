// lzlab: sources, codecs and recurrence statistics from the command line.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lzlab/bitio.hpp"
#include "lzlab/fslz.hpp"
#include "lzlab/lab.hpp"
#include "lzlab/recurrence.hpp"
#include "lzlab/sequence.hpp"
#include "lzlab/swlz.hpp"

namespace {

using namespace lzlab;

struct Io {
    std::string in;
    std::string out;

    std::unique_ptr<std::istream> open_in() const {
        if (in.empty() || in == "-") return nullptr;
        auto f = std::make_unique<std::ifstream>(in, std::ios::binary);
        if (!*f) throw std::runtime_error("cannot open '" + in + "'");
        return f;
    }

    SymbolSequence read_sequence() const {
        auto f = open_in();
        return read_sequence_file(f ? *f : std::cin);
    }

    std::vector<std::uint8_t> read_bytes() const {
        auto f = open_in();
        std::istream& s = f ? *f : std::cin;
        return {std::istreambuf_iterator<char>(s), std::istreambuf_iterator<char>()};
    }

    template <typename Fn>
    void write(Fn&& fn) const {
        if (out.empty() || out == "-") {
            fn(std::cout);
            std::cout.flush();
            return;
        }
        std::ofstream f(out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open '" + out + "' for writing");
        fn(f);
        if (!f) throw std::runtime_error("failed writing '" + out + "'");
    }
};

void add_io(CLI::App* cmd, Io& io, bool with_input = true) {
    if (with_input) cmd->add_option("--in", io.in, "Input file (default: stdin)");
    cmd->add_option("--out", io.out, "Output file (default: stdout)");
}

struct LawOptions {
    std::string family = "log";
    double c = 1.0;
    double epsilon = 0.25;

    recurrence::ReturnLaw law() const {
        recurrence::ReturnLaw l;
        if (family == "linear") {
            l = recurrence::ReturnLaw::linear(c, epsilon);
        } else if (family == "log") {
            l = recurrence::ReturnLaw::log(c, epsilon);
        } else if (family.rfind("power:", 0) == 0) {
            l = recurrence::ReturnLaw::power(std::stod(family.substr(6)), c, epsilon);
        } else {
            throw CLI::ValidationError("--law", "expected linear, log or power:<s>, got '" + family + "'");
        }
        l.validate();
        return l;
    }
};

CLI::Option* add_law(CLI::App* cmd, LawOptions& law) {
    auto* opt = cmd->add_option("--law", law.family, "Return-time law: linear | log | power:<s>");
    cmd->add_option("--c", law.c, "Law constant c")->check(CLI::PositiveNumber);
    cmd->add_option("--epsilon", law.epsilon, "Slack epsilon")->check(CLI::PositiveNumber);
    return opt;
}

void write_bytes(std::ostream& out, const std::vector<std::uint8_t>& bytes) {
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

const char* mode_name(swlz::PhraseMode m) { return m == swlz::PhraseMode::match ? "match" : "literal"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lzlab: fixed-shift and sliding-window LZ on zero-entropy sources"};
    app.require_subcommand(1);

    // generate
    Io gen_io;
    std::string gen_source;
    std::size_t gen_n = 0;
    std::uint64_t seed = 1;
    auto* gen = app.add_subcommand("generate", "Write a symbol sequence file");
    gen->add_option("--source", gen_source, "rotation:golden | rotation:sqrt2 | rotation:<theta> | periodic:<digits> | iid:<p0,p1,...>")
        ->required();
    gen->add_option("-n,--length", gen_n, "Number of symbols")->required();
    gen->add_option("--seed", seed, "Seed for stochastic sources");
    add_io(gen, gen_io, false);

    // encode-fslz / decode-fslz
    Io efs_io;
    std::size_t efs_window = 0;
    std::size_t efs_l_o = 0;
    LawOptions efs_law;
    auto* efs = app.add_subcommand("encode-fslz", "Fixed-shift LZ encode a sequence file");
    efs->add_option("--window", efs_window, "Window size n_w")->required()->check(CLI::Range(std::size_t{2}, std::size_t{0xFFFFFFFF}));
    auto* efs_ml = efs->add_option("--match-length", efs_l_o, "Block length l_o");
    auto* efs_lawopt = add_law(efs, efs_law);
    efs_ml->excludes(efs_lawopt);
    add_io(efs, efs_io);

    Io dfs_io;
    auto* dfs = app.add_subcommand("decode-fslz", "Decode an FSLZ frame to a sequence file");
    add_io(dfs, dfs_io);

    // encode-swlz / decode-swlz
    Io esw_io;
    std::size_t esw_window = 0;
    std::string esw_phrases;
    auto* esw = app.add_subcommand("encode-swlz", "Sliding-window LZ encode a sequence file");
    esw->add_option("--window", esw_window, "Window size n_w")->required()->check(CLI::Range(std::size_t{2}, std::size_t{0xFFFFFFFF}));
    esw->add_option("--emit-phrases", esw_phrases, "Write the phrase list as CSV to this file");
    add_io(esw, esw_io);

    Io dsw_io;
    auto* dsw = app.add_subcommand("decode-swlz", "Decode an SWLZ frame to a sequence file");
    add_io(dsw, dsw_io);

    // recurrence-scan
    Io rs_io;
    std::size_t rs_n = 0;
    std::size_t rs_start = 0;
    std::size_t rs_stride = 1;
    std::size_t rs_count = 1;
    std::size_t rs_cap = 0;
    LawOptions rs_law;
    auto* rs = app.add_subcommand("recurrence-scan", "Return times and match lengths at reference points");
    rs->add_option("--n", rs_n, "Word length / match window n")->required()->check(CLI::PositiveNumber);
    rs->add_option("--start", rs_start, "First reference index (default: n)");
    rs->add_option("--stride", rs_stride, "Distance between reference indices")->check(CLI::PositiveNumber);
    rs->add_option("--count", rs_count, "Number of reference indices")->check(CLI::PositiveNumber);
    rs->add_option("--cap", rs_cap, "Match lookahead cap (default: rest of sequence)");
    add_law(rs, rs_law);
    add_io(rs, rs_io);

    // mu-g
    Io mg_io;
    std::size_t mg_window = 0;
    std::size_t mg_l_o = 0;
    std::size_t mg_stride = 0;
    LawOptions mg_law;
    auto* mg = app.add_subcommand("mu-g", "Estimate mu(G), the no-match probability for l_o-blocks");
    mg->add_option("--window", mg_window, "Window size n_w")->required()->check(CLI::Range(std::size_t{2}, std::size_t{0xFFFFFFFF}));
    auto* mg_ml = mg->add_option("--match-length", mg_l_o, "Block length l_o");
    auto* mg_lawopt = add_law(mg, mg_law);
    mg_ml->excludes(mg_lawopt);
    mg->add_option("--stride", mg_stride, "Reference point stride (default: l_o)");
    add_io(mg, mg_io);

    // sweep
    Io sw_io;
    std::string sw_source = "rotation:golden";
    std::string sw_codec = "both";
    std::vector<std::size_t> sw_windows;
    std::size_t sw_factor = 64;
    std::size_t sw_n_total = 0;
    bool sw_timing = false;
    LawOptions sw_law;
    auto* swp = app.add_subcommand("sweep", "Compression ratios, mu(G) and bad-interval fractions over window sizes");
    swp->add_option("--source", sw_source, "Source descriptor");
    swp->add_option("--codec", sw_codec, "fslz | swlz | both")->check(CLI::IsMember({"fslz", "swlz", "both"}));
    swp->add_option("--nw", sw_windows, "Window sizes")->required()->delimiter(',');
    swp->add_option("--factor", sw_factor, "N = max(factor * n_w, 2^14)");
    auto* sw_nt = swp->add_option("--n-total", sw_n_total, "Fixed N for every row");
    sw_nt->excludes(swp->get_option("--factor"));
    swp->add_option("--seed", seed, "Seed for stochastic sources");
    swp->add_flag("--timing", sw_timing, "Append a wall_time column (makes output non-deterministic)");
    add_law(swp, sw_law);
    add_io(swp, sw_io, false);

    // fit
    Io fit_io;
    std::string fit_model;
    std::string fit_column = "rate_swlz";
    auto* fit = app.add_subcommand("fit", "Fit a decay model to sweep CSV rows");
    fit->add_option("--model", fit_model, "powerlog: C log2(n_w)/n_w^a | polylog: C/log2(n_w)^k")
        ->required()
        ->check(CLI::IsMember({"powerlog", "polylog"}));
    fit->add_option("--column", fit_column, "CSV column holding the ratio");
    add_io(fit, fit_io);

    // lz78-count
    Io lz_io;
    std::vector<std::size_t> lz_at;
    auto* lz = app.add_subcommand("lz78-count", "LZ78 complete-phrase counts at prefix lengths");
    lz->add_option("--at", lz_at, "Prefix lengths (default: whole sequence)")->delimiter(',');
    add_io(lz, lz_io);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            const auto spec = lab::parse_source(gen_source);
            const auto seq = lab::make_sequence(spec, gen_n, seed);
            gen_io.write([&](std::ostream& o) { write_sequence_file(o, seq); });
        } else if (*efs) {
            const auto seq = efs_io.read_sequence();
            const std::size_t l_o = efs_ml->count() > 0 ? efs_l_o : fslz::choose_match_length(efs_law.law(), efs_window);
            const auto enc = fslz::fslz_encode(seq, {efs_window, l_o, seq.alphabet});
            efs_io.write([&](std::ostream& o) { write_bytes(o, enc.frame); });
            std::cerr << "fslz: N=" << enc.stats.n_total << " l_o=" << l_o << " m=" << enc.stats.m
                      << " m1=" << enc.stats.m1 << " m2=" << enc.stats.m2 << " bits=" << enc.stats.bits_total
                      << " ratio=" << enc.stats.ratio << '\n';
        } else if (*dfs) {
            const auto seq = fslz::fslz_decode(dfs_io.read_bytes());
            dfs_io.write([&](std::ostream& o) { write_sequence_file(o, seq); });
        } else if (*esw) {
            const auto seq = esw_io.read_sequence();
            const auto enc = swlz::swlz_encode(seq, {esw_window, seq.alphabet});
            esw_io.write([&](std::ostream& o) { write_bytes(o, enc.frame); });
            if (!esw_phrases.empty()) {
                std::ofstream f(esw_phrases);
                if (!f) throw std::runtime_error("cannot open '" + esw_phrases + "'");
                f << "index,start,mode,offset,length,bits\n";
                for (std::size_t j = 0; j < enc.phrases.size(); ++j) {
                    const auto& p = enc.phrases[j];
                    f << j << ',' << p.start << ',' << mode_name(p.mode) << ',' << p.offset << ',' << p.length << ','
                      << p.cost << '\n';
                }
            }
            std::cerr << "swlz: N=" << enc.stats.n_total << " phrases=" << enc.stats.c_n
                      << " bits=" << enc.stats.bits_total << " ratio=" << enc.stats.ratio << '\n';
        } else if (*dsw) {
            const auto seq = swlz::swlz_decode(dsw_io.read_bytes());
            dsw_io.write([&](std::ostream& o) { write_sequence_file(o, seq); });
        } else if (*rs) {
            const auto seq = rs_io.read_sequence();
            const auto law = rs_law.law();
            const std::size_t start = rs->get_option("--start")->count() > 0 ? rs_start : rs_n;
            const std::size_t cap = rs_cap == 0 ? static_cast<std::size_t>(-1) : rs_cap;
            rs_io.write([&](std::ostream& o) {
                o.precision(12);
                o << "t,n,r_n,l_n,capped,normalized_return,normalized_match\n";
                for (std::size_t i = 0; i < rs_count; ++i) {
                    const std::size_t t = start + i * rs_stride;
                    if (t + rs_n > seq.size()) break;
                    const auto s = recurrence::sample_at(seq.view(), t, rs_n, cap);
                    o << s.t << ',' << s.n << ',';
                    if (s.r_n) o << *s.r_n;
                    o << ',';
                    if (s.l_n) o << *s.l_n;
                    o << ',' << (s.capped ? 1 : 0) << ',';
                    if (s.r_n && *s.r_n >= 1 && law.f(static_cast<double>(s.n)) > 0) o << recurrence::normalized_return(law, s);
                    o << ',';
                    if (s.l_n && *s.l_n >= 1 && !s.capped && law.f(static_cast<double>(*s.l_n)) > 0) {
                        o << recurrence::normalized_match(law, s);
                    }
                    o << '\n';
                }
            });
        } else if (*mg) {
            const auto seq = mg_io.read_sequence();
            const std::size_t l_o = mg_ml->count() > 0 ? mg_l_o : fslz::choose_match_length(mg_law.law(), mg_window);
            const std::size_t stride = mg_stride == 0 ? l_o : mg_stride;
            const auto est = recurrence::mu_g_estimate(seq.view(), l_o, mg_window, stride);
            mg_io.write([&](std::ostream& o) {
                o.precision(12);
                o << "l_o,n_w,trials,misses,mu_hat\n"
                  << est.l_o << ',' << est.n_w << ',' << est.trials << ',' << est.misses << ',' << est.mu_hat << '\n';
            });
        } else if (*swp) {
            lab::SweepConfig cfg;
            cfg.source = sw_source;
            cfg.run_fslz = sw_codec != "swlz";
            cfg.run_swlz = sw_codec != "fslz";
            cfg.windows = sw_windows;
            cfg.law = sw_law.law();
            cfg.n_total_factor = sw_factor;
            if (sw_nt->count() > 0) cfg.n_total = sw_n_total;
            cfg.seed = seed;
            const auto rows = lab::sweep(cfg);
            sw_io.write([&](std::ostream& o) { lab::write_sweep_csv(o, rows, sw_timing); });
        } else if (*fit) {
            auto f = fit_io.open_in();
            const auto points = lab::read_rate_points(f ? *f : std::cin, fit_column);
            const auto model = fit_model == "powerlog" ? lab::FitModel::power_log : lab::FitModel::poly_log;
            const auto res = lab::fit_rate(points, model);
            fit_io.write([&](std::ostream& o) {
                o.precision(12);
                o << "model,c_coef," << (model == lab::FitModel::power_log ? "a" : "k") << ",residual,poor\n"
                  << fit_model << ',' << res.c_coef << ',' << res.exponent << ',' << res.residual << ','
                  << (res.poor ? 1 : 0) << '\n';
            });
        } else if (*lz) {
            const auto seq = lz_io.read_sequence();
            if (lz_at.empty()) lz_at.push_back(seq.size());
            const auto counts = lab::lz78_phrase_count(seq.view(), lz_at);
            lz_io.write([&](std::ostream& o) {
                o << "prefix,phrases\n";
                for (std::size_t i = 0; i < lz_at.size(); ++i) o << lz_at[i] << ',' << counts[i] << '\n';
            });
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const bitio::DecodeError& e) {
        std::cerr << "lzlab: decode error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "lzlab: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
