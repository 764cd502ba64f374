#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qkd/bits.hpp"

namespace qkd {

/// Parameters of the rate-1/3 parallel-concatenated codec.
///
/// Tap vectors are ordered lowest degree first. feedback_poly acts on
/// [current input, D, D^2]; its lowest-order tap must be set so the
/// recursion is well defined. forward_poly acts on [feedback bit, D, D^2]:
/// the parity generator sees the feedback-combined bit, not the raw input.
/// The defaults realize the memory-2 (5,3) recursive systematic pair with
/// the feedback bit included as the forward generator's lowest-order term,
/// pinned by the impulse-response golden vector in the test suite.
struct TurboConfig {
    std::array<std::uint8_t, 3> feedback_poly{1, 0, 1};
    std::array<std::uint8_t, 3> forward_poly{1, 1, 1};
    std::size_t block_length = 1000;
    std::size_t interleaver_rows = 25;
    std::size_t interleaver_cols = 40;
    unsigned iterations = 20;
    double llr_clamp = 25.0;

    /// Throws std::invalid_argument when any invariant is violated.
    void validate() const;
};

/// Encoder output: systematic stream plus one parity stream per constituent
/// encoder, all of block length N (rate 1/3, no puncturing).
struct Codeword {
    BitVec systematic;
    BitVec parity1;
    BitVec parity2;
};

/// Soft input for the decoder. Sign convention: positive favors bit 0.
/// Every entry must have magnitude at most llr_clamp.
struct LlrBlock {
    std::vector<double> systematic;
    std::vector<double> parity1;
    std::vector<double> parity2;
};

struct DecodeResult {
    BitVec bits;
    unsigned iterations_run = 0;
};

/// Parity stream of one recursive systematic constituent encoder, run from
/// state 0 and left unterminated.
BitVec rsc_encode(const BitVec& input, const TurboConfig& config);

/// Row-column permutation: data written row-wise, read column-wise, i.e.
/// output[c*rows + r] == input[r*cols + c].
template <typename T>
std::vector<T> interleave(const std::vector<T>& input, std::size_t rows, std::size_t cols) {
    if (input.size() != rows * cols)
        throw std::invalid_argument("interleave: input length must equal rows*cols");
    std::vector<T> out(input.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out[c * rows + r] = input[r * cols + c];
    return out;
}

/// Exact inverse of interleave for the same geometry.
template <typename T>
std::vector<T> deinterleave(const std::vector<T>& input, std::size_t rows, std::size_t cols) {
    if (input.size() != rows * cols)
        throw std::invalid_argument("deinterleave: input length must equal rows*cols");
    std::vector<T> out(input.size());
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            out[r * cols + c] = input[c * rows + r];
    return out;
}

/// systematic = input; parity1 = rsc(input); parity2 = rsc(interleave(input)).
Codeword turbo_encode(const BitVec& input, const TurboConfig& config);

/// LLR of a hard bit received over a binary symmetric channel:
/// (+1 for bit 0, -1 for bit 1) * min(ln((1-crossover)/crossover), clamp).
/// Requires 0 < crossover < 0.5.
double bsc_llr(std::uint8_t bit, double crossover, double clamp);

/// One soft-in soft-out pass of the max-log a-posteriori decoder over the
/// 4-state trellis. Branch metric for systematic bit u and parity bit v is
/// 0.5*sign(u)*(sys + apriori) + 0.5*sign(v)*parity with sign(0) = +1.
/// Returns the extrinsic LLRs (a-posteriori minus sys minus apriori),
/// clamped to +-llr_clamp.
std::vector<double> max_log_map_component(const std::vector<double>& systematic_llr,
                                          const std::vector<double>& parity_llr,
                                          const std::vector<double>& apriori_llr,
                                          const TurboConfig& config);

/// Iterative turbo decoding: the two component decoders exchange extrinsic
/// information through the row-column permutation for exactly
/// config.iterations rounds, then hard decisions are taken from
/// systematic + extrinsic1 + deinterleave(extrinsic2) (non-negative -> 0).
DecodeResult turbo_decode(const LlrBlock& llrs, const TurboConfig& config);

} // namespace qkd
