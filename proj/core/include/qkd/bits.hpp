#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qkd {

/// Bit sequence with one bit per byte (values 0 or 1).
using BitVec = std::vector<std::uint8_t>;

inline std::size_t hamming_distance(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += (a[i] ^ b[i]) & 1u;
    return d;
}

/// Fraction of positions where the two sequences disagree; 0.0 for empty input.
inline double disagreement_rate(const BitVec& a, const BitVec& b) {
    if (a.empty() && b.empty())
        return 0.0;
    return static_cast<double>(hamming_distance(a, b)) / static_cast<double>(a.size());
}

} // namespace qkd
