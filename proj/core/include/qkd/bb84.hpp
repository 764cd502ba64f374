#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qkd/bits.hpp"
#include "qkd/random.hpp"

namespace qkd {

/// Measurement basis: rectilinear (0°/90°) or diagonal (45°/135°).
enum class Basis : std::uint8_t { Rectilinear = 0, Diagonal = 1 };

/// One transmitted qubit, encoded as the preparation basis plus the bit
/// value. The four (basis, bit) combinations stand in for the four photon
/// polarizations.
struct PhotonState {
    Basis basis = Basis::Rectilinear;
    std::uint8_t bit = 0;
};

/// Bookkeeping for one protocol run; all sequences have one entry per photon.
struct TransmissionRecord {
    BitVec alice_bits;
    std::vector<Basis> alice_bases;
    BitVec bob_bits;
    std::vector<Basis> bob_bases;
    std::vector<std::uint8_t> eavesdropped;
};

/// Correlated bit sequences that survive basis reconciliation.
struct SiftedKeyPair {
    BitVec alice_key;
    BitVec bob_key;
};

/// Channel-level knobs for one run: per-qubit interception probability,
/// number of photons, master seed.
struct ChannelParams {
    double s = 0.0;
    std::size_t photon_count = 1;
    std::uint64_t seed = 0;
};

struct PreparedPhotons {
    BitVec bits;
    std::vector<Basis> bases;
    std::vector<PhotonState> photons;
};

struct InterceptOutcome {
    std::vector<PhotonState> photons;
    std::vector<std::uint8_t> intercepted;
};

struct MeasurementOutcome {
    BitVec bits;
    std::vector<Basis> bases;
};

struct QberSample {
    double estimate = 0.0;
    SiftedKeyPair remaining;
};

/// Draw n random bits and bases and encode them as photons.
/// Throws std::invalid_argument for n == 0.
PreparedPhotons alice_prepare(std::size_t n, Rng& rng);

/// Project a photon onto a basis: the prepared bit when the bases match,
/// otherwise a fair coin.
std::uint8_t measure_photon(const PhotonState& photon, Basis basis, Rng& rng);

/// Intercept-and-resend attack. Each photon is independently intercepted
/// with probability s, measured in a random basis, and forwarded re-prepared
/// in that basis with the measured outcome. Non-intercepted photons pass
/// through untouched.
InterceptOutcome eve_intercept_resend(const std::vector<PhotonState>& photons, double s, Rng& rng);

/// Measure every photon in an independently drawn random basis.
MeasurementOutcome bob_measure(const std::vector<PhotonState>& photons, Rng& rng);

/// Keep exactly the positions where both parties used the same basis.
SiftedKeyPair sift(const TransmissionRecord& record);

/// Publicly compare a random sample of round(disclose_fraction * length)
/// positions: returns the sample's disagreement fraction and the key pair
/// with the disclosed positions removed.
/// Requires 0 < disclose_fraction < 1 and a sifted length of at least 10.
QberSample estimate_qber(const SiftedKeyPair& pair, double disclose_fraction, Rng& rng);

} // namespace qkd
