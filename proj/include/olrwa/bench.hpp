/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <olrwa/csv.hpp>
#include <olrwa/datagen.hpp>
#include <olrwa/online.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace olrwa::bench {

/// One row of a results table.
struct ExperimentResult {
    std::size_t trial = 0;
    double batch_r2 = 0.0;
    double online_r2 = 0.0;
    double gap = 0.0;
    double runtime_ms_batch = 0.0;
    double runtime_ms_online = 0.0;
    /// Adversarial runs only: final online model scored on each half.
    std::optional<double> r2_first_half;
    std::optional<double> r2_second_half;
};

enum class SyntheticMode { Consistent, Shifting };

/// Noise variances frozen from a calibration sweep against target batch R²
/// ranges (see tests/datagen_test.cpp). Defaults assume step = 1.
struct VarianceDefaults {
    double variance;
    double variance2;
};
VarianceDefaults default_variances(std::size_t dim, SyntheticMode mode);
/// Noise variance used by the adversarial scenario.
double default_adversarial_variance(std::size_t dim);

/// Settings shared by every experiment.
struct RunOptions {
    std::size_t trials = 5;
    std::uint64_t seed = 42;
    double base_fraction = 0.1;
    std::size_t inc_size = 10;
    PolicyKind policy = PolicyKind::FixedPoint;
    std::optional<double> w_base;
    std::optional<double> w_inc;
};

struct SyntheticOptions {
    RunOptions run;
    std::size_t dim = 2;
    std::size_t n = 200;
    SyntheticMode mode = SyntheticMode::Consistent;
    std::optional<double> variance;
    std::optional<double> variance2;
    datagen::Correlation correlation = datagen::Correlation::Positive;
    double step = 1.0;
};

struct AdversarialOptions {
    RunOptions run;
    std::size_t dim = 2;
    std::size_t n = 200;
    std::optional<double> variance;
    double step = 1.0;
};

struct CsvOptions {
    RunOptions run;
    io::CsvSpec csv;
};

/// Weights for a policy when the user gives none: fixed-point counts points
/// (w_base = base point count, w_inc = increment size), fixed-model is 1:1,
/// time-based 1:20 and confidence-based 20:1. Explicit values override.
WeightPolicy resolve_policy(const RunOptions& run, std::size_t base_points);

/// Seed for trial `trial` (1-based) of a run started with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// Throws InsufficientData when the settings cannot produce a base fit and
/// at least one increment for `n` points of `features` columns.
void check_sizes(std::size_t n, std::size_t features, const RunOptions& run);

/// Batch fit and online run over the same stream, both scored by R² on the whole stream.
ExperimentResult evaluate_stream(const DataBatch& stream, const OnlineConfig& config, std::size_t trial);
/// As above, also handing back the final online model.
ExperimentResult evaluate_stream(const DataBatch& stream, const OnlineConfig& config, std::size_t trial,
                                 RegressionModel& online_model);

/// Data for one synthetic trial, in stream order.
DataBatch synthetic_stream(const SyntheticOptions& opts, std::size_t trial);
DataBatch adversarial_stream(const AdversarialOptions& opts, std::size_t trial);

std::vector<ExperimentResult> run_synthetic(const SyntheticOptions& opts);
std::vector<ExperimentResult> run_adversarial(const AdversarialOptions& opts);
std::vector<ExperimentResult> run_csv(const CsvOptions& opts);

struct WriteOptions {
    /// Leading "# ..." line with the wall-clock time of the run.
    bool timestamp = true;
    /// Runtime columns; when false they are written as 0.
    bool timing = true;
    std::string command = "olrwa-bench";
};

/// CSV with header trial,batch_r2,online_r2,gap,runtime_ms_batch,runtime_ms_online
/// (plus r2_first_half,r2_second_half when any row has them), reals to 6 decimals.
void write_results(std::ostream& out, std::span<const ExperimentResult> results, const WriteOptions& opts);

double median(std::vector<double> values);

}// namespace olrwa::bench
