#include "qkd/reconciliation.hpp"

#include <algorithm>
#include <stdexcept>

#include "qkd/metrics.hpp"

namespace qkd {

namespace {

// Keeps systematic LLRs finite when the estimated QBER is zero.
constexpr double kCrossoverFloor = 1e-3;

} // namespace

BlockOutcome reconcile_block(const BitVec& alice_block, const BitVec& bob_block, double qber,
                             const TurboConfig& config) {
    config.validate();
    const std::size_t n = config.block_length;
    if (alice_block.size() != n || bob_block.size() != n)
        throw std::invalid_argument("reconcile_block: blocks must have exactly block_length bits");
    if (!(qber >= 0.0 && qber < 0.5))
        throw std::invalid_argument("reconcile_block: qber outside [0, 0.5)");

    const double crossover = std::max(qber, kCrossoverFloor);
    const Codeword cw = turbo_encode(alice_block, config);

    LlrBlock llrs;
    llrs.systematic.resize(n);
    llrs.parity1.resize(n);
    llrs.parity2.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        llrs.systematic[i] = bsc_llr(bob_block[i], crossover, config.llr_clamp);
    // Parity arrives over the noiseless authenticated channel: full confidence.
    for (std::size_t i = 0; i < n; ++i) {
        llrs.parity1[i] = cw.parity1[i] ? -config.llr_clamp : config.llr_clamp;
        llrs.parity2[i] = cw.parity2[i] ? -config.llr_clamp : config.llr_clamp;
    }

    DecodeResult decoded = turbo_decode(llrs, config);
    return {std::move(decoded.bits), 2 * n};
}

ReconciliationResult reconcile_key(const SiftedKeyPair& pair, double qber, const TurboConfig& config) {
    config.validate();
    if (pair.alice_key.size() != pair.bob_key.size())
        throw std::invalid_argument("reconcile_key: key lengths differ");
    const std::size_t n = config.block_length;
    if (pair.alice_key.size() < n)
        throw std::invalid_argument("reconcile_key: sifted key shorter than one block");

    const std::size_t blocks = pair.alice_key.size() / n;
    ReconciliationResult result;
    result.blocks_processed = blocks;
    result.qber_used = qber;
    result.corrected_key.reserve(blocks * n);

    for (std::size_t b = 0; b < blocks; ++b) {
        const auto first = b * n;
        const BitVec alice_block(pair.alice_key.begin() + first, pair.alice_key.begin() + first + n);
        const BitVec bob_block(pair.bob_key.begin() + first, pair.bob_key.begin() + first + n);
        BlockOutcome outcome = reconcile_block(alice_block, bob_block, qber, config);
        result.disclosed_bits += outcome.disclosed;
        result.corrected_key.insert(result.corrected_key.end(), outcome.corrected.begin(),
                                    outcome.corrected.end());
    }

    for (std::size_t i = 0; i < result.corrected_key.size(); ++i)
        result.residual_errors += (result.corrected_key[i] ^ pair.alice_key[i]) & 1u;
    return result;
}

double reconciliation_efficiency(std::size_t disclosed_bits, std::size_t key_bits, double qber) {
    if (key_bits == 0)
        throw std::invalid_argument("reconciliation_efficiency: key_bits must be positive");
    if (!(qber > 0.0 && qber < 0.5))
        throw std::invalid_argument("reconciliation_efficiency: qber outside (0, 0.5)");
    return static_cast<double>(disclosed_bits) /
           (static_cast<double>(key_bits) * binary_entropy(qber));
}

} // namespace qkd
