#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polar {

/// A bit sequence (a_1,...,a_m) naming one decoding channel / information bit.
/// a_1 is the first transform applied to the raw channel and the most
/// significant bit of the path's numeric index.
class Path {
public:
    Path() = default;
    explicit Path(std::vector<uint8_t> bits);

    static Path from_string(std::string_view text);
    static Path from_index(uint64_t index, int length);

    int length() const { return static_cast<int>(bits_.size()); }
    int weight() const;
    uint64_t index() const;
    const std::vector<uint8_t>& bits() const { return bits_; }
    uint8_t bit(int i) const { return bits_[static_cast<size_t>(i)]; }

    std::string str() const;

    // lexicographic on bits; for equal lengths this is also numeric index order
    auto operator<=>(const Path&) const = default;

private:
    std::vector<uint8_t> bits_;
};

/// Code C(m,T): tree depth m (block length n = 2^m) plus the information set T.
/// Paths outside T are frozen to 0. The info list is kept sorted and distinct.
struct CodeSpec {
    int m = 0;
    std::vector<Path> info;

    static CodeSpec make(int m, std::vector<Path> info);

    uint64_t block_length() const { return uint64_t{1} << m; }
    int k() const { return static_cast<int>(info.size()); }
    double rate() const { return static_cast<double>(k()) / static_cast<double>(block_length()); }

    // flag per leaf index: 1 if the path carries an information bit
    std::vector<uint8_t> info_mask() const;

    bool operator==(const CodeSpec&) const = default;
};

/// Information bits f_xi, one per path of spec.info, in the same order.
/// Frozen paths carry an implicit 0 and are never stored.
using Message = std::vector<uint8_t>;

struct Codeword {
    std::vector<uint8_t> bits; // over {0,1}

    // channel-domain view: bit a -> (-1)^a, so 0 -> +1 and 1 -> -1
    std::vector<int> channel_view() const;
    int weight() const;
    std::string str() const;

    bool operator==(const Codeword&) const = default;
};

} // namespace polar
