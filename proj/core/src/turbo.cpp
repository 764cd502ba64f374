#include "qkd/turbo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace qkd {

namespace {

constexpr unsigned kStates = 4;

// Transition tables for the 4-state trellis. State layout: bit 0 holds the
// most recent feedback bit, bit 1 the older one; shifting in f gives
// next = ((state << 1) | f) & 3.
struct Trellis {
    std::array<std::array<std::uint8_t, 2>, kStates> parity;
    std::array<std::array<std::uint8_t, 2>, kStates> next;
};

Trellis build_trellis(const TurboConfig& cfg) {
    Trellis t{};
    for (unsigned state = 0; state < kStates; ++state) {
        const std::uint8_t s1 = state & 1u;
        const std::uint8_t s2 = (state >> 1) & 1u;
        for (std::uint8_t u = 0; u < 2; ++u) {
            const std::uint8_t f =
                (cfg.feedback_poly[0] & u) ^ (cfg.feedback_poly[1] & s1) ^ (cfg.feedback_poly[2] & s2);
            t.parity[state][u] =
                (cfg.forward_poly[0] & f) ^ (cfg.forward_poly[1] & s1) ^ (cfg.forward_poly[2] & s2);
            t.next[state][u] = static_cast<std::uint8_t>(((state << 1) | f) & 3u);
        }
    }
    return t;
}

double sign_of(std::uint8_t bit) { return bit ? -1.0 : 1.0; }

void check_block_shape(const LlrBlock& llrs, const TurboConfig& config) {
    const std::size_t n = config.block_length;
    if (llrs.systematic.size() != n || llrs.parity1.size() != n || llrs.parity2.size() != n)
        throw std::invalid_argument("turbo_decode: LLR block shape does not match block length");
    const double bound = config.llr_clamp * (1.0 + 1e-12);
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(llrs.systematic[i]) > bound || std::abs(llrs.parity1[i]) > bound ||
            std::abs(llrs.parity2[i]) > bound)
            throw std::invalid_argument("turbo_decode: LLR magnitude exceeds llr_clamp");
    }
}

} // namespace

void TurboConfig::validate() const {
    for (const auto tap : feedback_poly)
        if (tap > 1)
            throw std::invalid_argument("TurboConfig: feedback taps must be 0 or 1");
    for (const auto tap : forward_poly)
        if (tap > 1)
            throw std::invalid_argument("TurboConfig: forward taps must be 0 or 1");
    if (feedback_poly[0] != 1)
        throw std::invalid_argument("TurboConfig: feedback polynomial must have its lowest-order tap set");
    if (block_length == 0)
        throw std::invalid_argument("TurboConfig: block length must be positive");
    if (interleaver_rows == 0 || interleaver_cols == 0 ||
        interleaver_rows * interleaver_cols != block_length)
        throw std::invalid_argument("TurboConfig: interleaver rows*cols must equal block length");
    if (iterations == 0)
        throw std::invalid_argument("TurboConfig: iteration count must be positive");
    if (!(llr_clamp > 0.0))
        throw std::invalid_argument("TurboConfig: llr_clamp must be positive");
}

BitVec rsc_encode(const BitVec& input, const TurboConfig& config) {
    config.validate();
    if (input.size() != config.block_length)
        throw std::invalid_argument("rsc_encode: input length must equal block length");
    const Trellis t = build_trellis(config);
    BitVec parity(input.size());
    unsigned state = 0;
    for (std::size_t i = 0; i < input.size(); ++i) {
        const std::uint8_t u = input[i] & 1u;
        parity[i] = t.parity[state][u];
        state = t.next[state][u];
    }
    return parity;
}

Codeword turbo_encode(const BitVec& input, const TurboConfig& config) {
    config.validate();
    if (input.size() != config.block_length)
        throw std::invalid_argument("turbo_encode: input length must equal block length");
    Codeword cw;
    cw.systematic = input;
    cw.parity1 = rsc_encode(input, config);
    cw.parity2 = rsc_encode(interleave(input, config.interleaver_rows, config.interleaver_cols), config);
    return cw;
}

double bsc_llr(std::uint8_t bit, double crossover, double clamp) {
    if (!(crossover > 0.0 && crossover < 0.5))
        throw std::invalid_argument("bsc_llr: crossover outside (0, 0.5)");
    if (!(clamp > 0.0))
        throw std::invalid_argument("bsc_llr: clamp must be positive");
    const double magnitude = std::min(std::log((1.0 - crossover) / crossover), clamp);
    return bit ? -magnitude : magnitude;
}

std::vector<double> max_log_map_component(const std::vector<double>& systematic_llr,
                                          const std::vector<double>& parity_llr,
                                          const std::vector<double>& apriori_llr,
                                          const TurboConfig& config) {
    config.validate();
    const std::size_t n = config.block_length;
    if (systematic_llr.size() != n || parity_llr.size() != n || apriori_llr.size() != n)
        throw std::invalid_argument("max_log_map_component: sequence lengths must equal block length");

    const Trellis t = build_trellis(config);

    // Finite stand-in for "impossible": strictly dominates any achievable
    // path-metric difference (|gamma| <= 1.5 * clamp per step).
    const double impossible = -4.0 * config.llr_clamp * static_cast<double>(n + 1);
    const double neg_inf = -std::numeric_limits<double>::infinity();

    // gamma for (time, state, input)
    auto gamma = [&](std::size_t i, unsigned state, std::uint8_t u) {
        return 0.5 * sign_of(u) * (systematic_llr[i] + apriori_llr[i]) +
               0.5 * sign_of(t.parity[state][u]) * parity_llr[i];
    };

    std::vector<std::array<double, kStates>> alpha(n + 1);
    alpha[0] = {0.0, impossible, impossible, impossible}; // encoder starts in state 0
    for (std::size_t i = 0; i < n; ++i) {
        alpha[i + 1].fill(neg_inf);
        for (unsigned state = 0; state < kStates; ++state) {
            for (std::uint8_t u = 0; u < 2; ++u) {
                const unsigned ns = t.next[state][u];
                alpha[i + 1][ns] = std::max(alpha[i + 1][ns], alpha[i][state] + gamma(i, state, u));
            }
        }
    }

    std::vector<std::array<double, kStates>> beta(n + 1);
    beta[n].fill(0.0); // unterminated trellis: uniform over end states
    for (std::size_t i = n; i-- > 0;) {
        for (unsigned state = 0; state < kStates; ++state) {
            double best = neg_inf;
            for (std::uint8_t u = 0; u < 2; ++u)
                best = std::max(best, gamma(i, state, u) + beta[i + 1][t.next[state][u]]);
            beta[i][state] = best;
        }
    }

    std::vector<double> extrinsic(n);
    for (std::size_t i = 0; i < n; ++i) {
        double best0 = neg_inf;
        double best1 = neg_inf;
        for (unsigned state = 0; state < kStates; ++state) {
            best0 = std::max(best0, alpha[i][state] + gamma(i, state, 0) + beta[i + 1][t.next[state][0]]);
            best1 = std::max(best1, alpha[i][state] + gamma(i, state, 1) + beta[i + 1][t.next[state][1]]);
        }
        const double aposteriori = best0 - best1;
        extrinsic[i] = std::clamp(aposteriori - systematic_llr[i] - apriori_llr[i],
                                  -config.llr_clamp, config.llr_clamp);
    }
    return extrinsic;
}

DecodeResult turbo_decode(const LlrBlock& llrs, const TurboConfig& config) {
    config.validate();
    check_block_shape(llrs, config);
    const std::size_t n = config.block_length;
    const std::size_t rows = config.interleaver_rows;
    const std::size_t cols = config.interleaver_cols;

    const std::vector<double> systematic_perm = interleave(llrs.systematic, rows, cols);
    std::vector<double> ext1(n, 0.0);
    std::vector<double> ext2(n, 0.0);
    for (unsigned it = 0; it < config.iterations; ++it) {
        ext1 = max_log_map_component(llrs.systematic, llrs.parity1,
                                     deinterleave(ext2, rows, cols), config);
        ext2 = max_log_map_component(systematic_perm, llrs.parity2,
                                     interleave(ext1, rows, cols), config);
    }

    const std::vector<double> ext2_natural = deinterleave(ext2, rows, cols);
    DecodeResult result;
    result.bits.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double decision = llrs.systematic[i] + ext1[i] + ext2_natural[i];
        result.bits[i] = decision >= 0.0 ? 0 : 1;
    }
    result.iterations_run = config.iterations;
    return result;
}

} // namespace qkd
