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
#include <olrwa/error.hpp>
#include <olrwa/regression.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace olrwa {

namespace {

constexpr double kDivergenceLimit = 1e12;

void require_dimension(const RegressionModel& model, std::size_t dim) {
    if (model.dimension() != dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "model has " + std::to_string(model.dimension()) + " features, data has " + std::to_string(dim));
    }
}

void require_non_empty(const DataBatch& data, const char* op) {
    if (data.is_empty()) {
        throw Error(ErrorKind::InvalidArgument, std::string(op) + " on an empty batch");
    }
}

}// namespace

DataBatch::DataBatch(Matrix features, Vector targets) : features_(std::move(features)), targets_(std::move(targets)) {
    if (features_.rows() != targets_.size()) {
        throw Error(ErrorKind::DimensionMismatch, std::to_string(features_.rows()) + " feature rows but " +
                                                      std::to_string(targets_.size()) + " targets");
    }
    if (!std::all_of(targets_.begin(), targets_.end(), [](double v) { return std::isfinite(v); })) {
        throw Error(ErrorKind::InvalidArgument, "targets must be finite");
    }
}

DataBatch DataBatch::empty(std::size_t dim) { return DataBatch(Matrix(0, dim), {}); }

DataBatch DataBatch::slice(std::size_t begin, std::size_t end) const {
    end = std::min(end, size());
    begin = std::min(begin, end);
    const std::size_t m = dimension();
    std::vector<double> f(features_.entries().begin() + static_cast<std::ptrdiff_t>(begin * m),
                          features_.entries().begin() + static_cast<std::ptrdiff_t>(end * m));
    Vector t(targets_.begin() + static_cast<std::ptrdiff_t>(begin), targets_.begin() + static_cast<std::ptrdiff_t>(end));
    return {Matrix(end - begin, m, std::move(f)), std::move(t)};
}

DataBatch DataBatch::select(std::span<const std::size_t> order) const {
    const std::size_t m = dimension();
    Matrix f(order.size(), m);
    Vector t(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= size()) {
            throw Error(ErrorKind::InvalidArgument, "row index " + std::to_string(order[i]) + " out of range");
        }
        std::copy(row(order[i]).begin(), row(order[i]).end(), f.row(i).begin());
        t[i] = targets_[order[i]];
    }
    return {std::move(f), std::move(t)};
}

DataBatch DataBatch::concat(const DataBatch& other) const {
    if (other.dimension() != dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot concatenate batches of dimension " + std::to_string(dimension()) +
                                                      " and " + std::to_string(other.dimension()));
    }
    std::vector<double> f(features_.entries().begin(), features_.entries().end());
    f.insert(f.end(), other.features_.entries().begin(), other.features_.entries().end());
    Vector t = targets_;
    t.insert(t.end(), other.targets_.begin(), other.targets_.end());
    return {Matrix(size() + other.size(), dimension(), std::move(f)), std::move(t)};
}

RegressionModel fit_pseudo_inverse(const DataBatch& data) {
    const std::size_t m = data.dimension();
    const std::size_t p = m + 1;
    if (data.size() < p) {
        throw Error(ErrorKind::SingularMatrix,
                    std::to_string(data.size()) + " points cannot determine " + std::to_string(p) + " coefficients");
    }

    // Accumulate XᵀX (upper triangle) and Xᵀy with the implicit bias column x̃[0] = 1.
    Matrix xtx(p, p);
    Vector xty(p, 0.0);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const auto x = data.row(i);
        const double y = data.target(i);
        xtx(0, 0) += 1.0;
        xty[0] += y;
        for (std::size_t a = 0; a < m; ++a) {
            xtx(0, a + 1) += x[a];
            xty[a + 1] += x[a] * y;
            for (std::size_t b = a; b < m; ++b) {
                xtx(a + 1, b + 1) += x[a] * x[b];
            }
        }
    }
    for (std::size_t a = 0; a < p; ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            xtx(a, b) = xtx(b, a);
        }
    }

    const Vector beta = linalg::solve_linear(xtx, xty);
    return {beta[0], Vector(beta.begin() + 1, beta.end())};
}

double predict(const RegressionModel& model, std::span<const double> x) {
    require_dimension(model, x.size());
    double y = model.intercept;
    for (std::size_t i = 0; i < x.size(); ++i) {
        y += model.coefficients[i] * x[i];
    }
    return y;
}

double mse(const RegressionModel& model, const DataBatch& data) {
    require_non_empty(data, "mse");
    require_dimension(model, data.dimension());
    double sse = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = data.target(i) - predict(model, data.row(i));
        sse += r * r;
    }
    return sse / static_cast<double>(data.size());
}

double r_squared(const RegressionModel& model, const DataBatch& data) {
    if (data.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "r_squared needs at least 2 points");
    }
    require_dimension(model, data.dimension());
    const auto& y = data.targets();
    if (std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); })) {
        throw Error(ErrorKind::ZeroVariance, "all targets are equal");
    }
    double mean = 0.0;
    for (double v : y) {
        mean += v;
    }
    mean /= static_cast<double>(y.size());

    double sse = 0.0;
    double sst = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double r = y[i] - predict(model, data.row(i));
        const double d = y[i] - mean;
        sse += r * r;
        sst += d * d;
    }
    return 1.0 - sse / sst;
}

RegressionModel fit_lms(const DataBatch& data, double learning_rate, std::size_t passes, const RegressionModel& initial) {
    if (!(learning_rate > 0.0) || !std::isfinite(learning_rate)) {
        throw Error(ErrorKind::InvalidArgument, "learning rate must be positive");
    }
    if (passes == 0) {
        throw Error(ErrorKind::InvalidArgument, "at least one pass is required");
    }
    require_dimension(initial, data.dimension());

    const std::size_t m = data.dimension();
    Vector w(m + 1);
    w[0] = initial.intercept;
    std::copy(initial.coefficients.begin(), initial.coefficients.end(), w.begin() + 1);

    for (std::size_t pass = 0; pass < passes; ++pass) {
        for (std::size_t i = 0; i < data.size(); ++i) {
            const auto x = data.row(i);
            double pred = w[0];
            for (std::size_t a = 0; a < m; ++a) {
                pred += w[a + 1] * x[a];
            }
            const double step = learning_rate * (pred - data.target(i));
            w[0] -= step;
            for (std::size_t a = 0; a < m; ++a) {
                w[a + 1] -= step * x[a];
            }
            for (double v : w) {
                if (!(std::abs(v) <= kDivergenceLimit)) {
                    throw Error(ErrorKind::Divergence, "LMS weights exceeded 1e12 at pass " + std::to_string(pass) +
                                                           ", point " + std::to_string(i) + "; lower the learning rate");
                }
            }
        }
    }
    return {w[0], Vector(w.begin() + 1, w.end())};
}

}// namespace olrwa
