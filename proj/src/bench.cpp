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
#include <olrwa/bench.hpp>
#include <olrwa/error.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <string>

namespace olrwa::bench {

namespace {

enum SeedStream : std::uint64_t { kNoise = 0, kShuffle = 1, kSampling = 2 };

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::size_t half_of(std::size_t n) { return (n + 1) / 2; }

OnlineConfig online_config(const RunOptions& run, std::size_t n, std::uint64_t seed) {
    OnlineConfig cfg;
    cfg.base_fraction = run.base_fraction;
    cfg.inc_size = run.inc_size;
    cfg.policy = resolve_policy(run, base_point_count(n, run.base_fraction));
    cfg.seed = derive_seed(seed, kSampling);
    return cfg;
}

std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    // Avoid "-0.000000" so byte comparisons do not depend on the sign of tiny values.
    if (std::string_view(buf) == "-0.000000") {
        return "0.000000";
    }
    return buf;
}

std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}// namespace

VarianceDefaults default_variances(std::size_t dim, SyntheticMode mode) {
    if (dim == 2) {
        return mode == SyntheticMode::Consistent ? VarianceDefaults{225.0, 225.0} : VarianceDefaults{225.0, 900.0};
    }
    return mode == SyntheticMode::Consistent ? VarianceDefaults{2.25, 2.25} : VarianceDefaults{2.25, 9.0};
}

double default_adversarial_variance(std::size_t dim) { return default_variances(dim, SyntheticMode::Consistent).variance; }

WeightPolicy resolve_policy(const RunOptions& run, std::size_t base_points) {
    WeightPolicy p;
    switch (run.policy) {
        case PolicyKind::FixedPoint:
            p = WeightPolicy::fixed_point(static_cast<double>(base_points), static_cast<double>(run.inc_size));
            break;
        case PolicyKind::FixedModel: p = WeightPolicy::fixed_model(); break;
        case PolicyKind::TimeBased: p = WeightPolicy::time_based(); break;
        case PolicyKind::ConfidenceBased: p = WeightPolicy::confidence_based(); break;
    }
    if (run.w_base) {
        p.w_base_init = *run.w_base;
    }
    if (run.w_inc) {
        p.w_inc = *run.w_inc;
    }
    p.validate();
    return p;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) { return derive_seed(seed, 1000 + trial); }

void check_sizes(std::size_t n, std::size_t features, const RunOptions& run) {
    if (run.trials == 0) {
        throw Error(ErrorKind::InvalidArgument, "at least one trial is required");
    }
    if (!(run.base_fraction > 0.0) || run.base_fraction > 1.0) {
        throw Error(ErrorKind::InvalidArgument, "base fraction must lie in (0, 1]");
    }
    const std::size_t base_n = base_point_count(n, run.base_fraction);
    if (base_n < features + 1) {
        throw Error(ErrorKind::InsufficientData, std::to_string(n) + " points with base fraction " +
                                                     std::to_string(run.base_fraction) + " leave " +
                                                     std::to_string(base_n) + " base points; at least " +
                                                     std::to_string(features + 1) + " are needed");
    }
    if (run.inc_size < features + 1) {
        throw Error(ErrorKind::InsufficientData, "increment size " + std::to_string(run.inc_size) + " is below " +
                                                     std::to_string(features + 1));
    }
}

ExperimentResult evaluate_stream(const DataBatch& stream, const OnlineConfig& config, std::size_t trial) {
    RegressionModel unused;
    return evaluate_stream(stream, config, trial, unused);
}

ExperimentResult evaluate_stream(const DataBatch& stream, const OnlineConfig& config, std::size_t trial,
                                 RegressionModel& online_model) {
    ExperimentResult r;
    r.trial = trial;

    auto t0 = Clock::now();
    const RegressionModel batch = fit_pseudo_inverse(stream);
    r.runtime_ms_batch = elapsed_ms(t0);

    t0 = Clock::now();
    const OnlineRun online = run_olrwa(stream, config);
    r.runtime_ms_online = elapsed_ms(t0);

    r.batch_r2 = r_squared(batch, stream);
    r.online_r2 = r_squared(online.final_model, stream);
    r.gap = r.batch_r2 - r.online_r2;
    online_model = online.final_model;
    return r;
}

DataBatch synthetic_stream(const SyntheticOptions& opts, std::size_t trial) {
    const std::uint64_t ts = trial_seed(opts.run.seed, trial);
    const VarianceDefaults defaults = default_variances(opts.dim, opts.mode);

    datagen::GenSpec spec;
    spec.n = opts.n;
    spec.dim = opts.dim;
    spec.variance = opts.variance.value_or(defaults.variance);
    spec.correlation = opts.correlation;
    spec.step = opts.step;
    spec.seed = derive_seed(ts, kNoise);

    if (opts.mode == SyntheticMode::Consistent) {
        const std::size_t ends[] = {opts.n};
        return datagen::shuffle_segments(datagen::gen_linear(spec), ends, derive_seed(ts, kShuffle));
    }
    const DataBatch data = datagen::gen_shifting_variance(spec, opts.variance2.value_or(defaults.variance2));
    const std::size_t ends[] = {half_of(opts.n), opts.n};
    return datagen::shuffle_segments(data, ends, derive_seed(ts, kShuffle));
}

DataBatch adversarial_stream(const AdversarialOptions& opts, std::size_t trial) {
    const std::uint64_t ts = trial_seed(opts.run.seed, trial);
    datagen::GenSpec spec;
    spec.n = opts.n;
    spec.dim = opts.dim;
    spec.variance = opts.variance.value_or(default_adversarial_variance(opts.dim));
    spec.step = opts.step;
    spec.seed = derive_seed(ts, kNoise);
    const std::size_t ends[] = {half_of(opts.n), opts.n};
    return datagen::shuffle_segments(datagen::gen_adversarial(spec), ends, derive_seed(ts, kShuffle));
}

std::vector<ExperimentResult> run_synthetic(const SyntheticOptions& opts) {
    if (opts.dim != 2 && opts.dim != 3) {
        throw Error(ErrorKind::InvalidArgument, "dim must be 2 or 3");
    }
    check_sizes(opts.n, opts.dim - 1, opts.run);
    std::vector<ExperimentResult> results;
    for (std::size_t t = 1; t <= opts.run.trials; ++t) {
        const DataBatch stream = synthetic_stream(opts, t);
        results.push_back(evaluate_stream(stream, online_config(opts.run, opts.n, trial_seed(opts.run.seed, t)), t));
    }
    return results;
}

std::vector<ExperimentResult> run_adversarial(const AdversarialOptions& opts) {
    if (opts.dim != 2 && opts.dim != 3) {
        throw Error(ErrorKind::InvalidArgument, "dim must be 2 or 3");
    }
    check_sizes(opts.n, opts.dim - 1, opts.run);
    std::vector<ExperimentResult> results;
    for (std::size_t t = 1; t <= opts.run.trials; ++t) {
        const DataBatch stream = adversarial_stream(opts, t);
        const OnlineConfig cfg = online_config(opts.run, opts.n, trial_seed(opts.run.seed, t));
        RegressionModel final_model;
        ExperimentResult r = evaluate_stream(stream, cfg, t, final_model);
        const std::size_t half = half_of(opts.n);
        r.r2_first_half = r_squared(final_model, stream.slice(0, half));
        r.r2_second_half = r_squared(final_model, stream.slice(half, opts.n));
        results.push_back(r);
    }
    return results;
}

std::vector<ExperimentResult> run_csv(const CsvOptions& opts) {
    io::CsvSpec spec = opts.csv;
    spec.shuffle_seed.reset();
    const DataBatch data = io::load_csv(spec);
    check_sizes(data.size(), data.dimension(), opts.run);

    std::vector<ExperimentResult> results;
    for (std::size_t t = 1; t <= opts.run.trials; ++t) {
        const std::uint64_t ts = trial_seed(opts.run.seed, t);
        // Same permutation load_csv would apply with shuffle_seed = derive_seed(ts, kShuffle).
        Rng rng(derive_seed(ts, kShuffle));
        const DataBatch stream = data.select(rng.permutation(data.size()));
        results.push_back(evaluate_stream(stream, online_config(opts.run, data.size(), ts), t));
    }
    return results;
}

void write_results(std::ostream& out, std::span<const ExperimentResult> results, const WriteOptions& opts) {
    const bool halves = std::any_of(results.begin(), results.end(), [](const ExperimentResult& r) {
        return r.r2_first_half.has_value();
    });
    if (opts.timestamp) {
        out << "# " << opts.command << " " << utc_now() << "\n";
    }
    out << "trial,batch_r2,online_r2,gap,runtime_ms_batch,runtime_ms_online";
    if (halves) {
        out << ",r2_first_half,r2_second_half";
    }
    out << "\n";
    for (const auto& r : results) {
        out << r.trial << ',' << format_real(r.batch_r2) << ',' << format_real(r.online_r2) << ',' << format_real(r.gap)
            << ',' << format_real(opts.timing ? r.runtime_ms_batch : 0.0) << ','
            << format_real(opts.timing ? r.runtime_ms_online : 0.0);
        if (halves) {
            out << ',' << format_real(r.r2_first_half.value_or(0.0)) << ',' << format_real(r.r2_second_half.value_or(0.0));
        }
        out << "\n";
    }
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw Error(ErrorKind::InvalidArgument, "median of no values");
    }
    std::sort(values.begin(), values.end());
    const std::size_t mid = values.size() / 2;
    return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}// namespace olrwa::bench
