#include "qkd/bb84.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qkd {

namespace {

Basis random_basis(Rng& rng) {
    return rng.bit() ? Basis::Diagonal : Basis::Rectilinear;
}

} // namespace

PreparedPhotons alice_prepare(std::size_t n, Rng& rng) {
    if (n == 0)
        throw std::invalid_argument("alice_prepare: photon count must be at least 1");
    PreparedPhotons out;
    out.bits.resize(n);
    out.bases.resize(n);
    out.photons.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.bits[i] = rng.bit();
        out.bases[i] = random_basis(rng);
        out.photons[i] = PhotonState{out.bases[i], out.bits[i]};
    }
    return out;
}

std::uint8_t measure_photon(const PhotonState& photon, Basis basis, Rng& rng) {
    if (photon.basis == basis)
        return photon.bit;
    return rng.bit();
}

InterceptOutcome eve_intercept_resend(const std::vector<PhotonState>& photons, double s, Rng& rng) {
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("eve_intercept_resend: interception probability outside [0,1]");
    InterceptOutcome out;
    out.photons = photons;
    out.intercepted.assign(photons.size(), 0);
    for (std::size_t i = 0; i < photons.size(); ++i) {
        if (rng.real() < s) {
            const Basis eve_basis = random_basis(rng);
            const std::uint8_t outcome = measure_photon(photons[i], eve_basis, rng);
            out.photons[i] = PhotonState{eve_basis, outcome};
            out.intercepted[i] = 1;
        }
    }
    return out;
}

MeasurementOutcome bob_measure(const std::vector<PhotonState>& photons, Rng& rng) {
    MeasurementOutcome out;
    out.bits.resize(photons.size());
    out.bases.resize(photons.size());
    for (std::size_t i = 0; i < photons.size(); ++i) {
        out.bases[i] = random_basis(rng);
        out.bits[i] = measure_photon(photons[i], out.bases[i], rng);
    }
    return out;
}

SiftedKeyPair sift(const TransmissionRecord& record) {
    const std::size_t n = record.alice_bits.size();
    if (record.alice_bases.size() != n || record.bob_bits.size() != n ||
        record.bob_bases.size() != n || record.eavesdropped.size() != n)
        throw std::invalid_argument("sift: transmission record sequences disagree in length");
    SiftedKeyPair pair;
    for (std::size_t i = 0; i < n; ++i) {
        if (record.alice_bases[i] == record.bob_bases[i]) {
            pair.alice_key.push_back(record.alice_bits[i]);
            pair.bob_key.push_back(record.bob_bits[i]);
        }
    }
    return pair;
}

QberSample estimate_qber(const SiftedKeyPair& pair, double disclose_fraction, Rng& rng) {
    if (pair.alice_key.size() != pair.bob_key.size())
        throw std::invalid_argument("estimate_qber: key lengths differ");
    if (!(disclose_fraction > 0.0 && disclose_fraction < 1.0))
        throw std::invalid_argument("estimate_qber: disclose_fraction outside (0,1)");
    const std::size_t n = pair.alice_key.size();
    if (n < 10)
        throw std::invalid_argument("estimate_qber: sifted key shorter than 10 bits");

    const std::size_t k = static_cast<std::size_t>(std::llround(disclose_fraction * static_cast<double>(n)));
    if (k == 0)
        return {0.0, pair}; // sample rounds to nothing; nothing disclosed

    // Partial Fisher-Yates: the first k slots end up holding a uniform
    // sample of distinct positions.
    std::vector<std::uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    for (std::size_t j = 0; j < k; ++j)
        std::swap(idx[j], idx[j + rng.below(n - j)]);

    std::size_t disagreements = 0;
    std::vector<std::uint8_t> keep(n, 1);
    for (std::size_t j = 0; j < k; ++j) {
        const std::uint32_t pos = idx[j];
        keep[pos] = 0;
        disagreements += (pair.alice_key[pos] ^ pair.bob_key[pos]) & 1u;
    }

    QberSample out;
    out.estimate = static_cast<double>(disagreements) / static_cast<double>(k);
    out.remaining.alice_key.reserve(n - k);
    out.remaining.bob_key.reserve(n - k);
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) {
            out.remaining.alice_key.push_back(pair.alice_key[i]);
            out.remaining.bob_key.push_back(pair.bob_key[i]);
        }
    }
    return out;
}

} // namespace qkd
