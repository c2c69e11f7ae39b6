#include "polar/codebook.hpp"

#include <algorithm>
#include <stdexcept>

namespace polar {

Path::Path(std::vector<uint8_t> bits) : bits_(std::move(bits)) {
    for (uint8_t b : bits_) {
        if (b > 1) throw std::invalid_argument("path bits must be 0 or 1");
    }
}

Path Path::from_string(std::string_view text) {
    std::vector<uint8_t> bits;
    bits.reserve(text.size());
    for (char c : text) {
        if (c != '0' && c != '1') throw std::invalid_argument("path string must be over {0,1}: " + std::string(text));
        bits.push_back(static_cast<uint8_t>(c - '0'));
    }
    return Path(std::move(bits));
}

Path Path::from_index(uint64_t index, int length) {
    if (length < 0 || length > 63) throw std::invalid_argument("path length out of range");
    if (length < 64 && index >> length) throw std::invalid_argument("path index too large for length");
    std::vector<uint8_t> bits(static_cast<size_t>(length));
    for (int i = 0; i < length; ++i)
        bits[static_cast<size_t>(i)] = static_cast<uint8_t>((index >> (length - 1 - i)) & 1u);
    return Path(std::move(bits));
}

int Path::weight() const {
    int w = 0;
    for (uint8_t b : bits_) w += b;
    return w;
}

uint64_t Path::index() const {
    uint64_t v = 0;
    for (uint8_t b : bits_) v = (v << 1) | b;
    return v;
}

std::string Path::str() const {
    std::string s;
    s.reserve(bits_.size());
    for (uint8_t b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

CodeSpec CodeSpec::make(int m, std::vector<Path> info) {
    if (m < 1 || m > 30) throw std::invalid_argument("code depth m must be in [1, 30]");
    if (info.empty()) throw std::invalid_argument("information set must be non-empty");
    for (const Path& p : info) {
        if (p.length() != m) throw std::invalid_argument("information path length does not match m");
    }
    std::sort(info.begin(), info.end());
    if (std::adjacent_find(info.begin(), info.end()) != info.end())
        throw std::invalid_argument("information set contains duplicate paths");
    if (info.size() > (uint64_t{1} << m)) throw std::invalid_argument("information set larger than 2^m");
    CodeSpec spec;
    spec.m = m;
    spec.info = std::move(info);
    return spec;
}

std::vector<uint8_t> CodeSpec::info_mask() const {
    std::vector<uint8_t> mask(block_length(), 0);
    for (const Path& p : info) mask[p.index()] = 1;
    return mask;
}

std::vector<int> Codeword::channel_view() const {
    std::vector<int> v(bits.size());
    for (size_t i = 0; i < bits.size(); ++i) v[i] = bits[i] ? -1 : +1;
    return v;
}

int Codeword::weight() const {
    int w = 0;
    for (uint8_t b : bits) w += b;
    return w;
}

std::string Codeword::str() const {
    std::string s;
    s.reserve(bits.size());
    for (uint8_t b : bits) s.push_back(static_cast<char>('0' + b));
    return s;
}

Codeword monomial_codeword(int m, const Path& xi) {
    if (xi.length() != m) throw std::invalid_argument("monomial path length does not match m");
    const uint64_t n = uint64_t{1} << m;
    // x^xi evaluates to 1 at point j iff every variable with a_l = 1 is 1 there
    uint64_t mask = xi.index();
    Codeword cw;
    cw.bits.resize(n);
    for (uint64_t j = 0; j < n; ++j)
        cw.bits[j] = static_cast<uint8_t>((j & mask) == mask);
    return cw;
}

CodeSpec rm_info_set(int r, int m) {
    if (r < 0 || r > m) throw std::invalid_argument("RM degree r must satisfy 0 <= r <= m");
    std::vector<Path> info;
    const uint64_t n = uint64_t{1} << m;
    for (uint64_t idx = 0; idx < n; ++idx) {
        Path p = Path::from_index(idx, m);
        if (p.weight() <= r) info.push_back(std::move(p));
    }
    return CodeSpec::make(m, std::move(info));
}

namespace {

void check_message(const CodeSpec& spec, const Message& msg) {
    if (msg.size() != spec.info.size())
        throw std::invalid_argument("message length does not match |T|");
    for (uint8_t b : msg)
        if (b > 1) throw std::invalid_argument("message bits must be 0 or 1");
}

// Plotkin recursion over (leaf index, f) pairs; depth counts consumed bits.
std::vector<uint8_t> plotkin_rec(const std::vector<std::pair<uint64_t, uint8_t>>& terms, int m) {
    if (m == 0) {
        uint8_t f = 0;
        for (auto& [idx, bit] : terms) f ^= bit; // distinct paths: at most one term
        return {f};
    }
    const uint64_t half_bit = uint64_t{1} << (m - 1);
    std::vector<std::pair<uint64_t, uint8_t>> u_terms, v_terms;
    for (auto& [idx, bit] : terms) {
        if (idx & half_bit)
            v_terms.emplace_back(idx & (half_bit - 1), bit);
        else
            u_terms.emplace_back(idx, bit);
    }
    std::vector<uint8_t> u = plotkin_rec(u_terms, m - 1);
    std::vector<uint8_t> v = plotkin_rec(v_terms, m - 1);
    std::vector<uint8_t> out(u.size() * 2);
    for (size_t i = 0; i < u.size(); ++i) {
        out[i] = u[i];
        out[i + u.size()] = static_cast<uint8_t>(u[i] ^ v[i]);
    }
    return out;
}

} // namespace

Codeword encode_monomial_sum(const CodeSpec& spec, const Message& msg) {
    check_message(spec, msg);
    Codeword acc;
    acc.bits.assign(spec.block_length(), 0);
    for (size_t t = 0; t < msg.size(); ++t) {
        if (!msg[t]) continue;
        Codeword mono = monomial_codeword(spec.m, spec.info[t]);
        for (size_t j = 0; j < acc.bits.size(); ++j) acc.bits[j] ^= mono.bits[j];
    }
    return acc;
}

Codeword encode_plotkin(const CodeSpec& spec, const Message& msg) {
    check_message(spec, msg);
    std::vector<std::pair<uint64_t, uint8_t>> terms;
    terms.reserve(msg.size());
    for (size_t t = 0; t < msg.size(); ++t)
        terms.emplace_back(spec.info[t].index(), msg[t]);
    Codeword cw;
    cw.bits = plotkin_rec(terms, spec.m);
    return cw;
}

} // namespace polar
