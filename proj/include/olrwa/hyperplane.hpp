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

#include <olrwa/regression.hpp>

#include <span>

namespace olrwa {

/// Thresholds for the geometric degeneracies the merge step has to detect.
struct GeometryTolerances {
    /// |target component of a unit normal| below this means the hyperplane is
    /// vertical and cannot be written as y = f(x).
    double vertical = 1e-9;
    /// |cos| between unit normals above 1 − parallel means the hyperplanes are parallel.
    double parallel = 1e-9;
    /// Parallel hyperplanes whose offsets agree to this relative tolerance coincide.
    double coincident = 1e-9;
};

/// A regression hyperplane in joint (features, target) space, stored as a unit
/// normal and a point on it. Both vectors have dimension()+1 components, the
/// target last. Canonical orientation has normal.back() <= 0.
struct Hyperplane {
    Vector normal;
    Vector anchor;

    [[nodiscard]] std::size_t dimension() const noexcept { return normal.empty() ? 0 : normal.size() - 1; }
    /// n·p + offset() = 0 for every point p on the hyperplane.
    [[nodiscard]] double offset() const { return -linalg::dot(normal, anchor); }
};

/// Unit normal (β₁..β_m, −1)/‖·‖ anchored at (x, predict(model, x)).
Hyperplane model_to_hyperplane(const RegressionModel& model, std::span<const double> anchor_features);

/// Inverse of model_to_hyperplane. Throws DegenerateHyperplane when the target
/// component of the normal is below tol.vertical in magnitude.
RegressionModel hyperplane_to_model(const Hyperplane& h, const GeometryTolerances& tol = {});

/// (sign·w_base·v_base + w_inc·v_inc)/(w_base + w_inc), renormalised to unit
/// length with the target component made non-positive. Throws ZeroAverage when
/// the unnormalised average has norm below 1e-12.
Vector weighted_average_normal(std::span<const double> v_base, std::span<const double> v_inc, double w_base, double w_inc,
                               int base_sign);

/// Minimum-norm point lying on both hyperplanes. Coincident hyperplanes give
/// the minimum-norm point of the first; parallel distinct ones throw
/// ParallelHyperplanes.
Vector intersection_point(const Hyperplane& h1, const Hyperplane& h2, const GeometryTolerances& tol = {});

}// namespace olrwa
