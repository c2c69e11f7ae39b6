// Command-line front end: construct, encode, decode, simulate, trace,
// polarize, order-scan. All machine output is CSV with '#' metadata lines;
// --format pretty renders aligned tables instead.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "polar/channel.hpp"
#include "polar/codebook.hpp"
#include "polar/decoder.hpp"
#include "polar/io.hpp"
#include "polar/ordering.hpp"
#include "polar/polarization.hpp"

using namespace polar;
namespace io = polar::io;

namespace {

struct CommonOpts {
    uint64_t seed = 0;
    std::string out;
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "randomness seed recorded in output metadata");
    cmd->add_option("--out", opts.out, "output file (stdout when omitted)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "pretty"}));
}

// epsilon / crossover are mutually exclusive ways to name the same channel
struct ChannelOpt {
    double epsilon = -1.0;
    double crossover = -1.0;

    void add(CLI::App* cmd, bool required) {
        auto* e = cmd->add_option("--epsilon", epsilon, "BSC offset in [0,1]");
        auto* p = cmd->add_option("--crossover", crossover, "BSC crossover probability in [0,1/2]");
        e->excludes(p);
        p->excludes(e);
        if (required) {
            // one of the two must be present; checked in resolve()
            (void)0;
        }
    }

    bool given() const { return epsilon >= 0.0 || crossover >= 0.0; }

    double resolve() const {
        if (epsilon >= 0.0 && crossover >= 0.0)
            throw CLI::ValidationError("give either --epsilon or --crossover, not both");
        if (epsilon >= 0.0) return epsilon;
        if (crossover >= 0.0) return 1.0 - 2.0 * crossover;
        throw CLI::ValidationError("one of --epsilon / --crossover is required");
    }
};

void emit(const CommonOpts& opts, const std::string& content) {
    if (opts.out.empty())
        std::cout << content;
    else
        io::write_text_file(opts.out, content);
}

std::string pretty_table(const std::vector<std::string>& header,
                         const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> width(header.size());
    for (size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t c = 0; c < r.size(); ++c) {
            os << r[c];
            if (c + 1 < r.size()) os << std::string(width[c] - r[c].size() + 2, ' ');
        }
        os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

// csv text -> (header, rows) for the pretty renderer
std::string csv_to_pretty(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::ostringstream meta;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            meta << line << "\n";
            continue;
        }
        std::vector<std::string> fields;
        std::string field;
        std::istringstream ls(line);
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (line.back() == ',') fields.push_back("");
        if (header.empty())
            header = fields;
        else
            rows.push_back(fields);
    }
    return meta.str() + pretty_table(header, rows);
}

void emit_report(const CommonOpts& opts, const std::string& csv) {
    emit(opts, opts.format == "pretty" ? csv_to_pretty(csv) : csv);
}

int cmd_construct(int m, uint64_t k, int rm_r, const ChannelOpt& chan, const CommonOpts& opts,
                  const std::string& design_out) {
    CodeSpec spec;
    io::Metadata meta{{"command", "construct"}, {"m", std::to_string(m)},
                      {"seed", std::to_string(opts.seed)}};
    bool have_design = false;
    OrderedDesign design;
    if (rm_r >= 0) {
        spec = rm_info_set(rm_r, m);
        meta.emplace_back("rm_r", std::to_string(rm_r));
        if (chan.given()) {
            const double eps = chan.resolve();
            design.m = m;
            design.epsilon = eps;
            design.b0 = 1.0 - eps * eps;
            design.b_table = b_moment_table(m, design.b0, &design.moment_steps);
            design.selected = spec.info_mask();
            design.k = spec.info.size();
            for (uint64_t idx = 0; idx < design.b_table.size(); ++idx)
                if (design.selected[idx]) design.sum_selected_b += design.b_table[idx];
            meta.emplace_back("epsilon", io::format17(eps));
            have_design = true;
        }
    } else {
        if (k == 0) throw CLI::ValidationError("construct needs --k (or --rm-r)");
        const double eps = chan.resolve();
        std::tie(spec, design) = construct_code(m, k, eps);
        meta.emplace_back("k", std::to_string(k));
        meta.emplace_back("epsilon", io::format17(eps));
        have_design = true;
    }

    std::ostringstream ss;
    io::write_code_spec(ss, spec, meta);
    emit(opts, ss.str());

    if (have_design) {
        meta.emplace_back("sum_selected_B", io::format17(design.sum_selected_b));
        if (!design_out.empty()) {
            std::ostringstream ds;
            io::write_design_csv(ds, design, meta);
            io::write_text_file(design_out, opts.format == "pretty" ? csv_to_pretty(ds.str())
                                                                    : ds.str());
        }
        std::cerr << "sum_selected_B = " << io::format17(design.sum_selected_b) << "\n";
    }
    return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& msg_path,
               const std::string& method, const CommonOpts& opts) {
    CodeSpec spec = io::read_code_spec_file(spec_path);
    std::ifstream ms(msg_path);
    if (!ms) throw std::runtime_error("cannot open message file: " + msg_path);
    Message msg = io::read_message(ms);
    Codeword cw = method == "monomial" ? encode_monomial_sum(spec, msg) : encode_plotkin(spec, msg);
    std::ostringstream ss;
    io::write_codeword(ss, cw,
                       {{"command", "encode"}, {"spec", spec_path}, {"method", method},
                        {"seed", std::to_string(opts.seed)}});
    emit(opts, ss.str());
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& soft_path,
               const std::string& symbols_path, const ChannelOpt& chan, const CommonOpts& opts,
               const std::string& leaf_out) {
    CodeSpec spec = io::read_code_spec_file(spec_path);
    std::vector<double> llr;
    if (!soft_path.empty()) {
        std::ifstream is(soft_path);
        if (!is) throw std::runtime_error("cannot open soft input: " + soft_path);
        llr = io::read_llrs(is);
    } else if (!symbols_path.empty()) {
        std::ifstream is(symbols_path);
        if (!is) throw std::runtime_error("cannot open symbols file: " + symbols_path);
        llr = bsc_soft(io::read_symbols(is), chan.resolve());
    } else {
        throw CLI::ValidationError("decode needs --soft or (--epsilon/--crossover + --symbols)");
    }
    DecodeOutput out = sc_decode(spec, llr);
    io::Metadata meta{{"command", "decode"}, {"spec", spec_path},
                      {"seed", std::to_string(opts.seed)}};
    std::ostringstream ss;
    io::write_message(ss, out.message, meta);
    emit(opts, ss.str());
    if (!leaf_out.empty()) {
        std::ostringstream ls;
        io::write_llrs(ls, out.leaf_llr, meta);
        io::write_text_file(leaf_out, ls.str());
    }
    return 0;
}

int cmd_simulate(const std::string& spec_path, const ChannelOpt& chan, uint64_t trials,
                 const CommonOpts& opts) {
    CodeSpec spec = io::read_code_spec_file(spec_path);
    const double eps = chan.resolve();
    GenieReport rep = genie_error_rates(spec, eps, trials, opts.seed);
    io::Metadata meta{{"command", "simulate"}, {"spec", spec_path},
                      {"epsilon", io::format17(eps)}, {"trials", std::to_string(trials)},
                      {"seed", std::to_string(opts.seed)}};
    std::ostringstream ss;
    io::write_genie_csv(ss, rep, meta);
    emit_report(opts, ss.str());
    if (!rep.all_bounds_ok()) {
        for (const auto& r : rep.rows) {
            if (!r.z_bound_ok)
                std::cerr << "bound violated: path " << r.path.str() << " rate "
                          << io::format17(r.rate) << " > Z " << io::format17(r.z) << " + 5 sigma\n";
            if (!r.b_bound_ok)
                std::cerr << "bound violated: path " << r.path.str() << " rate "
                          << io::format17(r.rate) << " > B " << io::format17(r.b) << " + 5 sigma\n";
        }
        return 1;
    }
    return 0;
}

int cmd_trace(const std::string& path_bits, const ChannelOpt& chan, const CommonOpts& opts) {
    const Path path = Path::from_string(path_bits);
    if (path.length() < 1) throw CLI::ValidationError("--path needs at least one bit");
    const double eps = chan.resolve();
    const double b0 = 1.0 - eps * eps;
    const std::vector<double> traj = moments_along_path(b0, path);
    io::Metadata meta{{"command", "trace"}, {"path", path.str()},
                      {"epsilon", io::format17(eps)}, {"seed", std::to_string(opts.seed)}};
    std::ostringstream ss;
    io::write_trace_csv(ss, path, traj, meta);
    emit_report(opts, ss.str());
    return 0;
}

int cmd_polarize(int levels, const ChannelOpt& chan, double b0_flag, const CommonOpts& opts,
                 const std::string& hist_out, const std::string& ratio_out) {
    double b0;
    io::Metadata meta{{"command", "polarize"}, {"levels", std::to_string(levels)},
                      {"seed", std::to_string(opts.seed)}};
    if (b0_flag >= 0.0) {
        if (chan.given()) throw CLI::ValidationError("give either --b0 or a channel, not both");
        b0 = b0_flag;
        meta.emplace_back("b0", io::format17(b0));
    } else {
        const double eps = chan.resolve();
        b0 = 1.0 - eps * eps;
        meta.emplace_back("epsilon", io::format17(eps));
        meta.emplace_back("b0", io::format17(b0));
    }
    std::vector<PolarStats> stats;
    stats.reserve(static_cast<size_t>(levels));
    for (int level = 1; level <= levels; ++level) stats.push_back(expected_v(level, b0));
    std::ostringstream ss;
    io::write_polar_stats_csv(ss, stats, meta);
    emit_report(opts, ss.str());
    if (!hist_out.empty()) {
        std::ostringstream hs;
        io::write_histogram_csv(hs, stats.back().histogram, meta);
        io::write_text_file(hist_out, opts.format == "pretty" ? csv_to_pretty(hs.str()) : hs.str());
    }
    if (!ratio_out.empty()) {
        std::ostringstream rs;
        rs << "# tool = " << io::kToolVersion << "\n# command = polarize --ratio-out\n";
        rs << "x,R\n";
        for (int i = 1; i <= 999; ++i) {
            const double x = static_cast<double>(i) / 1000.0;
            rs << io::format17(x) << "," << io::format17(ratio_R(x)) << "\n";
        }
        io::write_text_file(ratio_out, opts.format == "pretty" ? csv_to_pretty(rs.str()) : rs.str());
    }
    for (const auto& st : stats) {
        if (st.mean_v > st.bound + 1e-12) {
            std::cerr << "bound violated: E[V] " << io::format17(st.mean_v) << " > (sqrt3/2)^"
                      << st.level << " = " << io::format17(st.bound) << "\n";
            return 1;
        }
    }
    return 0;
}

int cmd_order_scan(int m, int w, int grid_points, const CommonOpts& opts) {
    OrderScanReport rep = order_scan(m, w, epsilon_grid(grid_points));
    io::Metadata meta{{"command", "order-scan"}, {"m", std::to_string(m)},
                      {"w", std::to_string(w)}, {"grid_points", std::to_string(grid_points)},
                      {"seed", std::to_string(opts.seed)},
                      {"all_permanent", rep.all_permanent() ? "1" : "0"}};
    std::ostringstream ss;
    io::write_order_scan_csv(ss, rep, meta);
    emit_report(opts, ss.str());
    std::cerr << "pairs = " << rep.pairs.size() << ", crossings = " << rep.crossing_count()
              << (rep.all_permanent() ? " (ordering permanent on this grid)"
                                      : " (ordering NOT permanent)")
              << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive Plotkin codes, SC decoding and B-moment polar construction"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code spec by B-moment ordering or as RM(r,m)");
    int c_m = 0;
    uint64_t c_k = 0;
    int c_rm_r = -1;
    ChannelOpt c_chan;
    CommonOpts c_opts;
    std::string c_design_out;
    construct->add_option("--m", c_m, "tree depth, block length 2^m")->required();
    construct->add_option("--k", c_k, "number of information paths");
    construct->add_option("--rm-r", c_rm_r, "build RM(r,m) instead of a polar selection");
    c_chan.add(construct, false);
    construct->add_option("--design-out", c_design_out, "write the full B table as CSV");
    add_common(construct, c_opts);

    // encode
    auto* encode = app.add_subcommand("encode", "encode a message file into a codeword");
    std::string e_spec, e_msg, e_method = "plotkin";
    CommonOpts e_opts;
    encode->add_option("--spec", e_spec, "code spec file")->required();
    encode->add_option("--message", e_msg, "message file (one line of 0/1 over info paths)")->required();
    encode->add_option("--method", e_method, "encoder")->check(CLI::IsMember({"plotkin", "monomial"}));
    add_common(encode, e_opts);

    // decode
    auto* decode = app.add_subcommand("decode", "SC-decode a soft-input or hard-symbol file");
    std::string d_spec, d_soft, d_symbols, d_leaf_out;
    ChannelOpt d_chan;
    CommonOpts d_opts;
    decode->add_option("--spec", d_spec, "code spec file")->required();
    decode->add_option("--soft", d_soft, "LLR file, one value per line (inf/-inf allowed)");
    decode->add_option("--symbols", d_symbols, "received +-1 symbols, one per line");
    d_chan.add(decode, false);
    decode->add_option("--leaf-out", d_leaf_out, "write every leaf LLR");
    add_common(decode, d_opts);

    // simulate
    auto* simulate = app.add_subcommand("simulate", "genie-aided per-path error rates with moment bounds");
    std::string s_spec;
    ChannelOpt s_chan;
    uint64_t s_trials = 10000;
    CommonOpts s_opts;
    simulate->add_option("--spec", s_spec, "code spec file")->required();
    s_chan.add(simulate, true);
    simulate->add_option("--trials", s_trials, "Monte Carlo trials");
    add_common(simulate, s_opts);

    // trace
    auto* trace = app.add_subcommand("trace", "B-moment trajectory along one path");
    std::string t_path;
    ChannelOpt t_chan;
    CommonOpts t_opts;
    trace->add_option("--path", t_path, "path bits a_1...a_m")->required();
    t_chan.add(trace, true);
    add_common(trace, t_opts);

    // polarize
    auto* polarize = app.add_subcommand("polarize", "exact E[V] statistics over all paths per level");
    int p_levels = 0;
    ChannelOpt p_chan;
    double p_b0 = -1.0;
    std::string p_hist_out, p_ratio_out;
    CommonOpts p_opts;
    polarize->add_option("--levels", p_levels, "deepest level to enumerate (<= 24)")->required();
    p_chan.add(polarize, false);
    polarize->add_option("--b0", p_b0, "base B moment (alternative to a channel)");
    polarize->add_option("--hist-out", p_hist_out, "write the log2(AB) histogram CSV");
    polarize->add_option("--ratio-out", p_ratio_out, "write the R(x) curve on the 999-point grid");
    add_common(polarize, p_opts);

    // order-scan
    auto* oscan = app.add_subcommand("order-scan", "permanence scan over same-weight path pairs");
    int o_m = 0, o_w = 0, o_grid = 99;
    CommonOpts o_opts;
    oscan->add_option("--m", o_m, "path length")->required();
    oscan->add_option("--w", o_w, "path weight class")->required();
    oscan->add_option("--grid-points", o_grid, "epsilon grid resolution");
    add_common(oscan, o_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(c_m, c_k, c_rm_r, c_chan, c_opts, c_design_out);
        if (encode->parsed()) return cmd_encode(e_spec, e_msg, e_method, e_opts);
        if (decode->parsed()) return cmd_decode(d_spec, d_soft, d_symbols, d_chan, d_opts, d_leaf_out);
        if (simulate->parsed()) return cmd_simulate(s_spec, s_chan, s_trials, s_opts);
        if (trace->parsed()) return cmd_trace(t_path, t_chan, t_opts);
        if (polarize->parsed()) return cmd_polarize(p_levels, p_chan, p_b0, p_opts, p_hist_out, p_ratio_out);
        if (oscan->parsed()) return cmd_order_scan(o_m, o_w, o_grid, o_opts);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
