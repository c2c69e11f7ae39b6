#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polar/channel.hpp"
#include "polar/decoder.hpp"
#include "polar/ordering.hpp"
#include "polar/paths.hpp"
#include "polar/polarization.hpp"

namespace polar::io {

inline constexpr const char* kToolVersion = "polar 0.1.0";

// key = value pairs emitted as leading '# ' lines in every text output
using Metadata = std::vector<std::pair<std::string, std::string>>;

std::string format17(double v); // 17 significant digits; inf / -inf literals

// ---- code specs (JSON: m, info_paths, meta) ----
void write_code_spec(std::ostream& os, const CodeSpec& spec, const Metadata& meta);
void write_code_spec_file(const std::string& path, const CodeSpec& spec, const Metadata& meta);
CodeSpec read_code_spec(std::istream& is);
CodeSpec read_code_spec_file(const std::string& path);

// ---- compound channels ("beta epsilon" rows) ----
void write_compound(std::ostream& os, const CompoundBsc& w, const Metadata& meta);
CompoundBsc read_compound(std::istream& is);

// ---- line-oriented payloads; '#' lines are skipped on read ----
void write_codeword(std::ostream& os, const Codeword& cw, const Metadata& meta);
Codeword read_codeword(std::istream& is);
void write_message(std::ostream& os, const Message& msg, const Metadata& meta);
Message read_message(std::istream& is);
void write_llrs(std::ostream& os, const std::vector<double>& llr, const Metadata& meta);
std::vector<double> read_llrs(std::istream& is);
void write_symbols(std::ostream& os, const std::vector<int>& symbols, const Metadata& meta);
std::vector<int> read_symbols(std::istream& is);

// ---- CSV reports ----
void write_design_csv(std::ostream& os, const OrderedDesign& design, const Metadata& meta);
void write_genie_csv(std::ostream& os, const GenieReport& report, const Metadata& meta);
void write_trace_csv(std::ostream& os, const Path& path, const std::vector<double>& trajectory,
                     const Metadata& meta);
void write_polar_stats_csv(std::ostream& os, const std::vector<PolarStats>& stats,
                           const Metadata& meta);
void write_histogram_csv(std::ostream& os, const AbHistogram& hist, const Metadata& meta);
void write_order_scan_csv(std::ostream& os, const OrderScanReport& report, const Metadata& meta);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace polar::io
