#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qkd/turbo.hpp"

namespace qkd {

/// Full experiment description; the sweep output is a pure function of this.
struct ExperimentConfig {
    double s_min = 0.0;
    double s_max = 1.0;
    std::size_t s_steps = 11;
    std::size_t photon_count = 40000;
    double disclose_fraction = 0.1;
    TurboConfig turbo{};
    std::uint64_t seed = 42;
    std::string output_path = "sweep.csv";
    bool clamp_plots = false;

    void validate() const;
};

/// One row of the s-sweep. residual_ber and efficiency are absent when the
/// sifted key is shorter than one block (nothing reconciled) and efficiency
/// additionally when the empirical QBER is zero (Shannon bound undefined).
struct SweepRecord {
    double s = 0.0;
    double qber_empirical = 0.0;
    double qber_theoretical = 0.0;
    double i_ab = 0.0;
    double i_ae = 0.0;
    double i_s = 0.0;
    std::size_t sifted_length = 0;
    std::optional<double> residual_ber;
    std::size_t disclosed_bits = 0;
    std::optional<double> efficiency;
};

/// Column names of the CSV emitted by emit_csv, in record field order.
extern const char* const kSweepCsvHeader;

/// One full protocol run at interception probability s: prepare, attack,
/// measure, sift, sample the QBER, reconcile, and evaluate the analytic
/// metrics. Deterministic given (config.seed, s).
SweepRecord run_point(double s, const ExperimentConfig& config);

/// s_steps evenly spaced points from s_min to s_max inclusive, in s order.
/// With threads > 1 the points are evaluated concurrently; the output is
/// identical to a serial run because every point derives its own random
/// stream from (seed, s).
std::vector<SweepRecord> run_sweep(const ExperimentConfig& config, unsigned threads = 1);

/// Write header plus one row per record; reals with 6 decimal places,
/// absent optionals as empty fields. Throws std::runtime_error with the
/// path on I/O failure.
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);

} // namespace qkd
