#pragma once

#include <cstddef>

#include "qkd/bb84.hpp"
#include "qkd/bits.hpp"
#include "qkd/turbo.hpp"

namespace qkd {

/// Outcome of reconciling a whole sifted key. disclosed_bits counts every
/// parity bit published on the noiseless public channel (2N per block at
/// rate 1/3), all of which are assumed known to an eavesdropper.
struct ReconciliationResult {
    BitVec corrected_key;
    std::size_t residual_errors = 0;
    std::size_t disclosed_bits = 0;
    std::size_t blocks_processed = 0;
    double qber_used = 0.0;
};

struct BlockOutcome {
    BitVec corrected;
    std::size_t disclosed = 0;
};

/// One-block reconciliation: Alice turbo-encodes her block and discloses
/// both parity streams; Bob decodes his own noisy copy against them with
/// systematic LLRs at crossover max(qber, 1e-3) and parity LLRs at full
/// clamp magnitude. Requires 0 <= qber < 0.5.
BlockOutcome reconcile_block(const BitVec& alice_block, const BitVec& bob_block, double qber,
                             const TurboConfig& config);

/// Partition the sifted key into floor(length/N) blocks of exactly N bits
/// (trailing remainder dropped), reconcile each block, and account residual
/// errors against Alice's key plus total disclosure.
ReconciliationResult reconcile_key(const SiftedKeyPair& pair, double qber, const TurboConfig& config);

/// Leakage relative to the Shannon bound: disclosed / (key_bits * h(qber)).
/// At least 1 for any real scheme; lower is better. Undefined at qber == 0.
double reconciliation_efficiency(std::size_t disclosed_bits, std::size_t key_bits, double qber);

} // namespace qkd
