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

#include <olrwa/linalg.hpp>

#include <cstddef>
#include <span>
#include <vector>

namespace olrwa {

using linalg::Matrix;
using linalg::Vector;

/// Linear model y = intercept + Σ coefficients[i]·x[i].
struct RegressionModel {
    double intercept = 0.0;
    Vector coefficients;

    [[nodiscard]] std::size_t dimension() const noexcept { return coefficients.size(); }

    friend bool operator==(const RegressionModel&, const RegressionModel&) = default;
};

/// Raw features (no bias column) plus targets. A batch may be empty, which
/// only happens for zero-size samples; fitting and scoring reject it.
class DataBatch {
  public:
    DataBatch() = default;
    /// Throws DimensionMismatch if the row count differs from the target count
    /// and InvalidArgument on non-finite targets.
    DataBatch(Matrix features, Vector targets);

    /// Empty batch with `dim` feature columns.
    static DataBatch empty(std::size_t dim);

    [[nodiscard]] std::size_t size() const noexcept { return targets_.size(); }
    [[nodiscard]] std::size_t dimension() const noexcept { return features_.cols(); }
    [[nodiscard]] bool is_empty() const noexcept { return targets_.empty(); }

    [[nodiscard]] const Matrix& features() const noexcept { return features_; }
    [[nodiscard]] const Vector& targets() const noexcept { return targets_; }
    [[nodiscard]] std::span<const double> row(std::size_t i) const noexcept { return features_.row(i); }
    [[nodiscard]] double target(std::size_t i) const noexcept { return targets_[i]; }

    /// Rows [begin, end) as a new batch.
    [[nodiscard]] DataBatch slice(std::size_t begin, std::size_t end) const;
    /// Rows in the order given by `order`.
    [[nodiscard]] DataBatch select(std::span<const std::size_t> order) const;
    /// Rows of `this` followed by rows of `other`.
    [[nodiscard]] DataBatch concat(const DataBatch& other) const;

    friend bool operator==(const DataBatch&, const DataBatch&) = default;

  private:
    Matrix features_;
    Vector targets_;
};

/// Least-squares fit through the normal equations (XᵀX)β = Xᵀy with a bias
/// column prepended to the features. Throws SingularMatrix when XᵀX cannot be
/// inverted, which includes every batch with fewer than dimension()+1 rows.
RegressionModel fit_pseudo_inverse(const DataBatch& data);

double predict(const RegressionModel& model, std::span<const double> x);

/// Mean squared error over the batch.
double mse(const RegressionModel& model, const DataBatch& data);

/// Coefficient of determination 1 − SSE/SST. Throws ZeroVariance when all
/// targets are equal.
double r_squared(const RegressionModel& model, const DataBatch& data);

/// Widrow-Hoff / LMS: for each point in batch order, w ← w − α(w·x̃ − y)x̃ where
/// x̃ is x with a leading 1, repeated `passes` times. Throws Divergence once any
/// weight leaves [-1e12, 1e12].
RegressionModel fit_lms(const DataBatch& data, double learning_rate, std::size_t passes, const RegressionModel& initial);

}// namespace olrwa
