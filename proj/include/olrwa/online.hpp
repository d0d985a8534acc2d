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

#include <olrwa/error.hpp>
#include <olrwa/hyperplane.hpp>
#include <olrwa/regression.hpp>
#include <olrwa/rng.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace olrwa {

enum class PolicyKind { FixedPoint, FixedModel, TimeBased, ConfidenceBased };

std::string_view to_string(PolicyKind kind) noexcept;
std::optional<PolicyKind> parse_policy_kind(std::string_view name) noexcept;

/// How the base and incremental models are weighted in the normal average.
///
/// FixedPoint treats every point equally: after each accepted merge the base
/// absorbs the increment, w_base += w_inc. The other kinds keep w_base fixed
/// and express their bias purely through the w_base_init : w_inc ratio.
struct WeightPolicy {
    PolicyKind kind = PolicyKind::FixedPoint;
    double w_base_init = 1.0;
    double w_inc = 1.0;

    /// Weights are per point: w_base_init is the base point count, w_inc the increment size.
    static WeightPolicy fixed_point(double base_points, double inc_points) {
        return {PolicyKind::FixedPoint, base_points, inc_points};
    }
    static WeightPolicy fixed_model(double w_base = 1.0, double w_inc = 1.0) {
        return {PolicyKind::FixedModel, w_base, w_inc};
    }
    /// New data dominates (1:20 by default).
    static WeightPolicy time_based(double w_base = 1.0, double w_inc = 20.0) {
        return {PolicyKind::TimeBased, w_base, w_inc};
    }
    /// Existing model dominates (20:1 by default).
    static WeightPolicy confidence_based(double w_base = 20.0, double w_inc = 1.0) {
        return {PolicyKind::ConfidenceBased, w_base, w_inc};
    }

    /// Throws InvalidArgument unless both weights are positive and finite.
    void validate() const;

    friend bool operator==(const WeightPolicy&, const WeightPolicy&) = default;
};

/// w_base for the next iteration after an accepted merge.
double update_weights(const WeightPolicy& policy, double w_base);

/// Running per-feature bounding box of every feature vector seen so far.
struct FeatureBounds {
    Vector lo;
    Vector hi;

    static FeatureBounds of(const DataBatch& batch);
    void extend(const DataBatch& batch);
    [[nodiscard]] std::size_t dimension() const noexcept { return lo.size(); }

    friend bool operator==(const FeatureBounds&, const FeatureBounds&) = default;
};

/// Everything the online learner keeps between increments. Past points are
/// not retained; the model is their only summary.
struct OnlineState {
    RegressionModel model;
    double w_base = 1.0;
    WeightPolicy policy;
    FeatureBounds bounds;
    std::size_t iteration = 0;
    Rng rng{0};
    GeometryTolerances tolerances;

    /// State after fitting the base model on `base`.
    static OnlineState start(const DataBatch& base, const WeightPolicy& policy, std::uint64_t seed,
                             const GeometryTolerances& tolerances = {});

    friend bool operator==(const OnlineState&, const OnlineState&) = default;
};

/// `count` points with features uniform in `bounds` and noise-free targets
/// from `model`.
DataBatch sample_base_points(const RegressionModel& model, const FeatureBounds& bounds, std::size_t count, Rng& rng);
DataBatch sample_base_points(OnlineState& state, std::size_t count);

/// What happened in one merge.
struct StepRecord {
    std::size_t iteration = 0;
    RegressionModel model;
    /// 1 or 2 for the winning candidate, 0 when the increment was skipped.
    int chosen = 0;
    /// Evaluation-set MSE of each candidate; NaN when the candidate could not be formed.
    double mse1 = 0.0;
    double mse2 = 0.0;
    double w_base = 0.0;
    std::optional<ErrorKind> skip_reason;

    friend bool operator==(const StepRecord&, const StepRecord&) = default;
};

struct MergeResult {
    OnlineState state;
    StepRecord record;
};

/// One increment: fit the batch, average the two hyperplane normals both
/// ways, anchor both averages at the intersection of the base and
/// incremental hyperplanes, and keep whichever explains the evaluation set
/// (batch plus an equal number of points sampled from the base model) better.
///
/// Parallel hyperplanes, or no usable candidate, leave the model and w_base
/// untouched; bounds, iteration and the RNG still advance.
///
/// Throws BatchTooSmall when the batch has fewer than dimension()+1 points,
/// and propagates SingularMatrix from the incremental fit.
MergeResult merge_step(OnlineState state, const DataBatch& batch);

struct OnlineConfig {
    double base_fraction = 0.1;
    std::size_t inc_size = 10;
    WeightPolicy policy = WeightPolicy::fixed_point(20.0, 10.0);
    std::uint64_t seed = 42;
    GeometryTolerances tolerances;
};

struct OnlineRun {
    RegressionModel base_model;
    RegressionModel final_model;
    std::vector<StepRecord> trace;
};

/// Number of leading points used for the base fit.
std::size_t base_point_count(std::size_t n, double base_fraction);

/// Fits the base model on the first ⌈base_fraction·n⌉ points, then merges
/// consecutive chunks of inc_size points. A trailing chunk with fewer than
/// dimension()+1 points is dropped. Throws InsufficientData when either the
/// base or the increment size cannot determine a model.
OnlineRun run_olrwa(const DataBatch& data, const OnlineConfig& config);

}// namespace olrwa
