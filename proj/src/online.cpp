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
#include <olrwa/online.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace olrwa {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Vector centroid(const DataBatch& batch) {
    Vector c(batch.dimension(), 0.0);
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto x = batch.row(i);
        for (std::size_t j = 0; j < c.size(); ++j) {
            c[j] += x[j];
        }
    }
    for (double& v : c) {
        v /= static_cast<double>(batch.size());
    }
    return c;
}

std::optional<RegressionModel> candidate(const Hyperplane& base, const Hyperplane& inc, const Vector& point,
                                         const OnlineState& state, int sign) {
    try {
        Hyperplane h{weighted_average_normal(base.normal, inc.normal, state.w_base, state.policy.w_inc, sign), point};
        return hyperplane_to_model(h, state.tolerances);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ZeroAverage || e.kind() == ErrorKind::DegenerateHyperplane) {
            return std::nullopt;
        }
        throw;
    }
}

StepRecord skipped(const OnlineState& s, ErrorKind reason) {
    return {s.iteration, s.model, 0, kNaN, kNaN, s.w_base, reason};
}

}// namespace

std::string_view to_string(PolicyKind kind) noexcept {
    switch (kind) {
        case PolicyKind::FixedPoint: return "fixed-point";
        case PolicyKind::FixedModel: return "fixed-model";
        case PolicyKind::TimeBased: return "time";
        case PolicyKind::ConfidenceBased: return "confidence";
    }
    return "unknown";
}

std::optional<PolicyKind> parse_policy_kind(std::string_view name) noexcept {
    for (auto k : {PolicyKind::FixedPoint, PolicyKind::FixedModel, PolicyKind::TimeBased, PolicyKind::ConfidenceBased}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

void WeightPolicy::validate() const {
    if (!(w_base_init > 0.0) || !(w_inc > 0.0) || !std::isfinite(w_base_init) || !std::isfinite(w_inc)) {
        throw Error(ErrorKind::InvalidArgument, "weights must be positive and finite");
    }
}

double update_weights(const WeightPolicy& policy, double w_base) {
    return policy.kind == PolicyKind::FixedPoint ? w_base + policy.w_inc : w_base;
}

FeatureBounds FeatureBounds::of(const DataBatch& batch) {
    if (batch.is_empty()) {
        throw Error(ErrorKind::InvalidArgument, "bounds of an empty batch");
    }
    FeatureBounds b;
    b.lo.assign(batch.row(0).begin(), batch.row(0).end());
    b.hi = b.lo;
    b.extend(batch);
    return b;
}

void FeatureBounds::extend(const DataBatch& batch) {
    if (batch.dimension() != dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "batch dimension does not match bounds");
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
        const auto x = batch.row(i);
        for (std::size_t j = 0; j < x.size(); ++j) {
            lo[j] = std::min(lo[j], x[j]);
            hi[j] = std::max(hi[j], x[j]);
        }
    }
}

OnlineState OnlineState::start(const DataBatch& base, const WeightPolicy& policy, std::uint64_t seed,
                               const GeometryTolerances& tolerances) {
    policy.validate();
    OnlineState s;
    s.model = fit_pseudo_inverse(base);
    s.w_base = policy.w_base_init;
    s.policy = policy;
    s.bounds = FeatureBounds::of(base);
    s.iteration = 0;
    s.rng = Rng(seed);
    s.tolerances = tolerances;
    return s;
}

DataBatch sample_base_points(const RegressionModel& model, const FeatureBounds& bounds, std::size_t count, Rng& rng) {
    const std::size_t m = bounds.dimension();
    if (model.dimension() != m) {
        throw Error(ErrorKind::DimensionMismatch, "model and bounds dimensions differ");
    }
    Matrix features(count, m);
    Vector targets(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto x = features.row(i);
        for (std::size_t j = 0; j < m; ++j) {
            x[j] = rng.uniform(bounds.lo[j], bounds.hi[j]);
        }
        targets[i] = predict(model, x);
    }
    return {std::move(features), std::move(targets)};
}

DataBatch sample_base_points(OnlineState& state, std::size_t count) {
    return sample_base_points(state.model, state.bounds, count, state.rng);
}

MergeResult merge_step(OnlineState state, const DataBatch& batch) {
    const std::size_t m = state.model.dimension();
    if (batch.dimension() != m) {
        throw Error(ErrorKind::DimensionMismatch,
                    "batch has " + std::to_string(batch.dimension()) + " features, model has " + std::to_string(m));
    }
    if (batch.size() < m + 1) {
        throw Error(ErrorKind::BatchTooSmall, std::to_string(batch.size()) + " points cannot fit a model with " +
                                                  std::to_string(m) + " features");
    }

    const RegressionModel inc_model = fit_pseudo_inverse(batch);
    state.bounds.extend(batch);
    state.iteration += 1;

    const DataBatch base_points = sample_base_points(state, batch.size());
    const Hyperplane base = model_to_hyperplane(state.model, centroid(base_points));
    const Hyperplane inc = model_to_hyperplane(inc_model, centroid(batch));

    Vector point;
    try {
        point = intersection_point(base, inc, state.tolerances);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::ParallelHyperplanes) {
            throw;
        }
        StepRecord rec = skipped(state, e.kind());
        return {std::move(state), std::move(rec)};
    }

    const std::array<std::optional<RegressionModel>, 2> candidates{candidate(base, inc, point, state, +1),
                                                                    candidate(base, inc, point, state, -1)};
    if (!candidates[0] && !candidates[1]) {
        StepRecord rec = skipped(state, ErrorKind::ZeroAverage);
        return {std::move(state), std::move(rec)};
    }

    const DataBatch eval = batch.concat(base_points);
    const double mse1 = candidates[0] ? mse(*candidates[0], eval) : kNaN;
    const double mse2 = candidates[1] ? mse(*candidates[1], eval) : kNaN;

    // Ties go to the +v_base branch.
    int chosen = 1;
    if (!candidates[0] || (candidates[1] && mse2 < mse1)) {
        chosen = 2;
    }

    state.model = *candidates[static_cast<std::size_t>(chosen - 1)];
    state.w_base = update_weights(state.policy, state.w_base);
    StepRecord rec{state.iteration, state.model, chosen, mse1, mse2, state.w_base, std::nullopt};
    return {std::move(state), std::move(rec)};
}

std::size_t base_point_count(std::size_t n, double base_fraction) {
    // The small slack keeps 0.1·200 at 20 rather than rounding up to 21.
    return static_cast<std::size_t>(std::ceil(base_fraction * static_cast<double>(n) - 1e-9));
}

OnlineRun run_olrwa(const DataBatch& data, const OnlineConfig& config) {
    const std::size_t n = data.size();
    const std::size_t m = data.dimension();
    if (!(config.base_fraction > 0.0) || config.base_fraction > 1.0) {
        throw Error(ErrorKind::InvalidArgument, "base fraction must lie in (0, 1]");
    }
    const std::size_t base_n = base_point_count(n, config.base_fraction);
    if (m == 0) {
        throw Error(ErrorKind::InsufficientData, "data has no feature columns");
    }
    if (base_n < m + 1) {
        throw Error(ErrorKind::InsufficientData, "base fraction of " + std::to_string(n) + " points gives " +
                                                     std::to_string(base_n) + " base points; need at least " +
                                                     std::to_string(m + 1));
    }
    if (config.inc_size < m + 1) {
        throw Error(ErrorKind::InsufficientData, "increment size " + std::to_string(config.inc_size) +
                                                     " is below the " + std::to_string(m + 1) + " points a fit needs");
    }

    OnlineState state = OnlineState::start(data.slice(0, base_n), config.policy, config.seed, config.tolerances);
    OnlineRun run;
    run.base_model = state.model;

    for (std::size_t begin = base_n; begin < n; begin += config.inc_size) {
        const std::size_t end = std::min(n, begin + config.inc_size);
        if (end - begin < m + 1) {
            break;
        }
        auto [next, record] = merge_step(std::move(state), data.slice(begin, end));
        state = std::move(next);
        run.trace.push_back(std::move(record));
    }
    run.final_model = state.model;
    return run;
}

}// namespace olrwa
