#include "polar/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace polar::io {

namespace {

void write_meta(std::ostream& os, const Metadata& meta) {
    os << "# tool = " << kToolVersion << "\n";
    for (const auto& [k, v] : meta) os << "# " << k << " = " << v << "\n";
}

// lines with content, '#' comments skipped, with 1-based line numbers
std::vector<std::pair<int, std::string>> payload_lines(std::istream& is) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(is, line)) {
        ++no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        size_t end = line.find_last_not_of(" \t");
        out.emplace_back(no, line.substr(start, end - start + 1));
    }
    return out;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw std::runtime_error("parse error at line " + std::to_string(line_no) + ": " + what);
}

double parse_double(int line_no, const std::string& tok) {
    if (tok == "inf" || tok == "+inf") return std::numeric_limits<double>::infinity();
    if (tok == "-inf") return -std::numeric_limits<double>::infinity();
    try {
        size_t pos = 0;
        double v = std::stod(tok, &pos);
        if (pos != tok.size()) parse_fail(line_no, "trailing characters in number '" + tok + "'");
        return v;
    } catch (const std::invalid_argument&) {
        parse_fail(line_no, "not a number: '" + tok + "'");
    } catch (const std::out_of_range&) {
        parse_fail(line_no, "number out of range: '" + tok + "'");
    }
}

} // namespace

std::string format17(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_code_spec(std::ostream& os, const CodeSpec& spec, const Metadata& meta) {
    nlohmann::json j;
    j["m"] = spec.m;
    std::vector<std::string> paths;
    paths.reserve(spec.info.size());
    for (const Path& p : spec.info) paths.push_back(p.str());
    j["info_paths"] = paths;
    nlohmann::json jm;
    jm["tool"] = kToolVersion;
    for (const auto& [k, v] : meta) jm[k] = v;
    j["meta"] = jm;
    os << j.dump(2) << "\n";
}

void write_code_spec_file(const std::string& path, const CodeSpec& spec, const Metadata& meta) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_code_spec(os, spec, meta);
}

CodeSpec read_code_spec(std::istream& is) {
    nlohmann::json j;
    try {
        is >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("spec file is not valid JSON: ") + e.what());
    }
    if (!j.contains("m") || !j.contains("info_paths"))
        throw std::runtime_error("spec file needs fields 'm' and 'info_paths'");
    const int m = j["m"].get<int>();
    std::vector<Path> info;
    for (const auto& s : j["info_paths"]) info.push_back(Path::from_string(s.get<std::string>()));
    return CodeSpec::make(m, std::move(info));
}

CodeSpec read_code_spec_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open spec file: " + path);
    return read_code_spec(is);
}

void write_compound(std::ostream& os, const CompoundBsc& w, const Metadata& meta) {
    write_meta(os, meta);
    for (const auto& c : w.components())
        os << format17(c.beta) << " " << format17(c.epsilon) << "\n";
}

CompoundBsc read_compound(std::istream& is) {
    std::vector<BscComponent> comps;
    for (const auto& [no, line] : payload_lines(is)) {
        std::istringstream ss(line);
        std::string b, e, extra;
        if (!(ss >> b >> e)) parse_fail(no, "expected 'beta epsilon'");
        if (ss >> extra) parse_fail(no, "expected exactly two fields");
        comps.push_back(BscComponent{parse_double(no, b), parse_double(no, e)});
    }
    return CompoundBsc::from_components(std::move(comps));
}

void write_codeword(std::ostream& os, const Codeword& cw, const Metadata& meta) {
    write_meta(os, meta);
    os << cw.str() << "\n";
}

Codeword read_codeword(std::istream& is) {
    auto lines = payload_lines(is);
    if (lines.size() != 1) throw std::runtime_error("codeword file must hold exactly one payload line");
    Codeword cw;
    for (char c : lines[0].second) {
        if (c != '0' && c != '1') parse_fail(lines[0].first, "codeword characters must be 0 or 1");
        cw.bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return cw;
}

void write_message(std::ostream& os, const Message& msg, const Metadata& meta) {
    write_meta(os, meta);
    for (uint8_t b : msg) os << static_cast<char>('0' + b);
    os << "\n";
}

Message read_message(std::istream& is) {
    auto lines = payload_lines(is);
    if (lines.size() != 1) throw std::runtime_error("message file must hold exactly one payload line");
    Message msg;
    for (char c : lines[0].second) {
        if (c != '0' && c != '1') parse_fail(lines[0].first, "message characters must be 0 or 1");
        msg.push_back(static_cast<uint8_t>(c - '0'));
    }
    return msg;
}

void write_llrs(std::ostream& os, const std::vector<double>& llr, const Metadata& meta) {
    write_meta(os, meta);
    for (double v : llr) os << format17(v) << "\n";
}

std::vector<double> read_llrs(std::istream& is) {
    std::vector<double> llr;
    for (const auto& [no, line] : payload_lines(is)) llr.push_back(parse_double(no, line));
    return llr;
}

void write_symbols(std::ostream& os, const std::vector<int>& symbols, const Metadata& meta) {
    write_meta(os, meta);
    for (int s : symbols) os << (s > 0 ? "1" : "-1") << "\n";
}

std::vector<int> read_symbols(std::istream& is) {
    std::vector<int> out;
    for (const auto& [no, line] : payload_lines(is)) {
        if (line == "1" || line == "+1")
            out.push_back(+1);
        else if (line == "-1")
            out.push_back(-1);
        else
            parse_fail(no, "channel symbols must be +1 or -1");
    }
    return out;
}

void write_design_csv(std::ostream& os, const OrderedDesign& design, const Metadata& meta) {
    write_meta(os, meta);
    os << "path,B,selected\n";
    for (uint64_t idx = 0; idx < design.b_table.size(); ++idx)
        os << Path::from_index(idx, design.m).str() << "," << format17(design.b_table[idx]) << ","
           << static_cast<int>(design.selected[idx]) << "\n";
}

void write_genie_csv(std::ostream& os, const GenieReport& report, const Metadata& meta) {
    write_meta(os, meta);
    os << "path,trials,errors,rate,A,B,Z,z_bound_ok,b_bound_ok\n";
    for (const auto& r : report.rows)
        os << r.path.str() << "," << report.trials << "," << r.errors << "," << format17(r.rate)
           << "," << format17(r.a) << "," << format17(r.b) << "," << format17(r.z) << ","
           << (r.z_bound_ok ? 1 : 0) << "," << (r.b_bound_ok ? 1 : 0) << "\n";
}

void write_trace_csv(std::ostream& os, const Path& path, const std::vector<double>& trajectory,
                     const Metadata& meta) {
    write_meta(os, meta);
    os << "path,step,bit,B,A,Z_upper,Z_lower\n";
    for (size_t step = 0; step < trajectory.size(); ++step) {
        const double b = trajectory[step];
        os << path.str() << "," << step << ",";
        if (step > 0) os << static_cast<int>(path.bit(static_cast<int>(step) - 1));
        os << "," << format17(b) << "," << format17(1.0 - b) << "," << format17(std::sqrt(b)) << ","
           << format17(b) << "\n";
    }
}

void write_polar_stats_csv(std::ostream& os, const std::vector<PolarStats>& stats,
                           const Metadata& meta) {
    write_meta(os, meta);
    os << "level,b0,mean_V,bound,fraction_ge_threshold\n";
    for (const auto& st : stats)
        os << st.level << "," << format17(st.b0) << "," << format17(st.mean_v) << ","
           << format17(st.bound) << "," << format17(st.fraction_ge_threshold) << "\n";
}

void write_histogram_csv(std::ostream& os, const AbHistogram& hist, const Metadata& meta) {
    write_meta(os, meta);
    os << "bucket_lo,bucket_hi,count\n";
    if (hist.underflow > 0) os << "-inf,-1000," << hist.underflow << "\n";
    for (const auto& b : hist.buckets)
        os << format17(b.lo) << "," << format17(b.hi) << "," << b.count << "\n";
}

void write_order_scan_csv(std::ostream& os, const OrderScanReport& report, const Metadata& meta) {
    write_meta(os, meta);
    os << "pair_a,pair_b,permanent,crossing_eps_lo,crossing_eps_hi\n";
    for (const auto& p : report.pairs) {
        if (p.crossings.empty()) {
            os << p.a.str() << "," << p.b.str() << "," << (p.permanent ? 1 : 0) << ",,\n";
        } else {
            for (const auto& [lo, hi] : p.crossings)
                os << p.a.str() << "," << p.b.str() << "," << (p.permanent ? 1 : 0) << ","
                   << format17(lo) << "," << format17(hi) << "\n";
        }
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    os << content;
}

} // namespace polar::io
