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

#include <cstddef>
#include <cstdint>
#include <span>

namespace olrwa::datagen {

enum class Correlation { Positive, Negative };

/// Synthetic dataset parameters. `dim` counts the target, so dim 2 has one
/// feature and dim 3 has two.
struct GenSpec {
    std::size_t n = 200;
    std::size_t dim = 2;
    double variance = 0.0;
    Correlation correlation = Correlation::Positive;
    double step = 1.0;
    std::uint64_t seed = 0;
    /// Generating model: y = intercept ± slope·Σx, sign from `correlation`.
    double intercept = 0.0;
    double slope = 1.0;

    /// Throws InvalidArgument for dim outside {2, 3}, n < dim, negative
    /// variance or a non-positive step.
    void validate() const;
};

/// Noise-free generating model for a correlation sign.
RegressionModel generating_model(const GenSpec& spec, Correlation correlation);

/// Feature layout shared by all generators: x = i·step in 2-D; in 3-D a
/// row-major grid with ⌈√n⌉ columns and spacing step.
Matrix feature_layout(std::size_t n, std::size_t dim, double step);

/// Points on the generating model plus zero-mean Gaussian noise of the given
/// variance. The noise stream is Rng(seed).normal() in point order.
DataBatch gen_linear(const GenSpec& spec);

/// As gen_linear, but points from index ⌈n/2⌉ on use `variance2`. Features and
/// the underlying standard-normal draws are identical to gen_linear.
DataBatch gen_shifting_variance(const GenSpec& spec, double variance2);

/// First ⌈n/2⌉ points follow spec.correlation, the rest the opposite sign.
/// Each half uses its own copy of the feature layout, so both halves cover
/// the same feature range and share the intercept.
DataBatch gen_adversarial(const GenSpec& spec);

/// Shuffles rows within consecutive segments [0, ends[0]), [ends[0], ends[1]), …
/// leaving segment order intact. ends must be increasing and finish at size().
DataBatch shuffle_segments(const DataBatch& data, std::span<const std::size_t> ends, std::uint64_t seed);

}// namespace olrwa::datagen
