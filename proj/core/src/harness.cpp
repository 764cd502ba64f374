#include "qkd/harness.hpp"

#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "qkd/bb84.hpp"
#include "qkd/metrics.hpp"
#include "qkd/random.hpp"
#include "qkd/reconciliation.hpp"

namespace qkd {

const char* const kSweepCsvHeader =
    "s,qber_empirical,qber_theoretical,i_ab,i_ae,i_s,sifted_length,residual_ber,disclosed_bits,efficiency";

namespace {

// Sub-stream ids, consumed in protocol order.
enum Stream : std::uint64_t { kAlice = 0, kEve = 1, kBob = 2, kSampling = 3 };

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace

void ExperimentConfig::validate() const {
    if (!(s_min >= 0.0 && s_min <= 1.0) || !(s_max >= 0.0 && s_max <= 1.0))
        throw std::invalid_argument("ExperimentConfig: s range outside [0,1]");
    if (s_min > s_max)
        throw std::invalid_argument("ExperimentConfig: s_min greater than s_max");
    if (s_steps == 0)
        throw std::invalid_argument("ExperimentConfig: s_steps must be at least 1");
    if (photon_count == 0)
        throw std::invalid_argument("ExperimentConfig: photon_count must be positive");
    if (!(disclose_fraction > 0.0 && disclose_fraction < 1.0))
        throw std::invalid_argument("ExperimentConfig: disclose_fraction outside (0,1)");
    turbo.validate();
}

SweepRecord run_point(double s, const ExperimentConfig& config) {
    config.validate();
    if (!(s >= 0.0 && s <= 1.0))
        throw std::invalid_argument("run_point: s outside [0,1]");

    // Per-point stream keyed by (seed, s); sub-streams in fixed party order
    // so evaluation order never changes the outcome.
    const std::uint64_t point_seed = derive_seed(config.seed, std::bit_cast<std::uint64_t>(s));
    Rng alice_rng(derive_seed(point_seed, kAlice));
    Rng eve_rng(derive_seed(point_seed, kEve));
    Rng bob_rng(derive_seed(point_seed, kBob));
    Rng sampling_rng(derive_seed(point_seed, kSampling));

    PreparedPhotons prepared = alice_prepare(config.photon_count, alice_rng);
    InterceptOutcome attacked = eve_intercept_resend(prepared.photons, s, eve_rng);
    MeasurementOutcome measured = bob_measure(attacked.photons, bob_rng);

    TransmissionRecord record{std::move(prepared.bits), std::move(prepared.bases),
                              std::move(measured.bits), std::move(measured.bases),
                              std::move(attacked.intercepted)};
    const SiftedKeyPair sifted = sift(record);

    SweepRecord rec;
    rec.s = s;
    rec.qber_theoretical = theoretical_qber(s);
    const SecurityPoint sp = security_at(s);
    rec.i_ab = sp.i_ab;
    rec.i_ae = sp.i_ae;
    rec.i_s = config.clamp_plots ? std::max(0.0, sp.i_s) : sp.i_s;
    rec.sifted_length = sifted.alice_key.size();
    rec.qber_empirical = disagreement_rate(sifted.alice_key, sifted.bob_key);

    if (sifted.alice_key.size() >= 10) {
        const QberSample sample = estimate_qber(sifted, config.disclose_fraction, sampling_rng);
        if (sample.remaining.alice_key.size() >= config.turbo.block_length) {
            const ReconciliationResult rr =
                reconcile_key(sample.remaining, sample.estimate, config.turbo);
            rec.disclosed_bits = rr.disclosed_bits;
            rec.residual_ber = rr.corrected_key.empty()
                                   ? 0.0
                                   : static_cast<double>(rr.residual_errors) /
                                         static_cast<double>(rr.corrected_key.size());
            if (rec.qber_empirical > 0.0)
                rec.efficiency = reconciliation_efficiency(rr.disclosed_bits,
                                                           rr.corrected_key.size(),
                                                           rec.qber_empirical);
        }
    }
    return rec;
}

std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, unsigned threads) {
    config.validate();

    std::vector<double> s_values(config.s_steps);
    if (config.s_steps == 1) {
        s_values[0] = config.s_min;
    } else {
        const double step = (config.s_max - config.s_min) / static_cast<double>(config.s_steps - 1);
        for (std::size_t i = 0; i < config.s_steps; ++i)
            s_values[i] = config.s_min + step * static_cast<double>(i);
    }

    std::vector<SweepRecord> records(s_values.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < s_values.size(); ++i)
            records[i] = run_point(s_values[i], config);
        return records;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= s_values.size())
                return;
            records[i] = run_point(s_values[i], config);
        }
    };
    std::vector<std::thread> pool;
    const unsigned count = std::min<unsigned>(threads, static_cast<unsigned>(s_values.size()));
    pool.reserve(count);
    for (unsigned i = 0; i < count; ++i)
        pool.emplace_back(worker);
    for (auto& th : pool)
        th.join();
    return records;
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("emit_csv: cannot open for writing: " + path);

    out << kSweepCsvHeader << '\n';
    for (const SweepRecord& r : records) {
        out << fixed6(r.s) << ',' << fixed6(r.qber_empirical) << ','
            << fixed6(r.qber_theoretical) << ',' << fixed6(r.i_ab) << ',' << fixed6(r.i_ae) << ','
            << fixed6(r.i_s) << ',' << r.sifted_length << ','
            << (r.residual_ber ? fixed6(*r.residual_ber) : std::string{}) << ','
            << r.disclosed_bits << ','
            << (r.efficiency ? fixed6(*r.efficiency) : std::string{}) << '\n';
    }
    if (!out)
        throw std::runtime_error("emit_csv: write failed: " + path);
}

} // namespace qkd
