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
#include <olrwa/datagen.hpp>
#include <olrwa/error.hpp>
#include <olrwa/rng.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace olrwa::datagen {

namespace {

Correlation flipped(Correlation c) { return c == Correlation::Positive ? Correlation::Negative : Correlation::Positive; }

std::size_t first_half(std::size_t n) { return (n + 1) / 2; }

}// namespace

void GenSpec::validate() const {
    if (dim != 2 && dim != 3) {
        throw Error(ErrorKind::InvalidArgument, "dim must be 2 or 3, got " + std::to_string(dim));
    }
    if (n < dim) {
        throw Error(ErrorKind::InvalidArgument, "n = " + std::to_string(n) + " is below dim = " + std::to_string(dim));
    }
    if (!(variance >= 0.0) || !std::isfinite(variance)) {
        throw Error(ErrorKind::InvalidArgument, "variance must be a finite value >= 0");
    }
    if (!(step > 0.0) || !std::isfinite(step)) {
        throw Error(ErrorKind::InvalidArgument, "step must be positive");
    }
}

RegressionModel generating_model(const GenSpec& spec, Correlation correlation) {
    const double s = correlation == Correlation::Positive ? spec.slope : -spec.slope;
    return {spec.intercept, Vector(spec.dim - 1, s)};
}

Matrix feature_layout(std::size_t n, std::size_t dim, double step) {
    Matrix f(n, dim - 1);
    if (dim == 2) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i, 0) = static_cast<double>(i) * step;
        }
        return f;
    }
    const auto side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    for (std::size_t i = 0; i < n; ++i) {
        f(i, 0) = static_cast<double>(i % side) * step;
        f(i, 1) = static_cast<double>(i / side) * step;
    }
    return f;
}

DataBatch gen_linear(const GenSpec& spec) { return gen_shifting_variance(spec, spec.variance); }

DataBatch gen_shifting_variance(const GenSpec& spec, double variance2) {
    spec.validate();
    if (!(variance2 >= 0.0) || !std::isfinite(variance2)) {
        throw Error(ErrorKind::InvalidArgument, "second variance must be a finite value >= 0");
    }
    Matrix features = feature_layout(spec.n, spec.dim, spec.step);
    const RegressionModel truth = generating_model(spec, spec.correlation);
    const std::size_t half = first_half(spec.n);
    const double sd1 = std::sqrt(spec.variance);
    const double sd2 = std::sqrt(variance2);

    Rng rng(spec.seed);
    Vector targets(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const double z = rng.normal();
        targets[i] = predict(truth, features.row(i)) + (i < half ? sd1 : sd2) * z;
    }
    return {std::move(features), std::move(targets)};
}

DataBatch gen_adversarial(const GenSpec& spec) {
    spec.validate();
    const std::size_t n1 = first_half(spec.n);
    const std::size_t n2 = spec.n - n1;
    const Matrix layout1 = feature_layout(n1, spec.dim, spec.step);
    const Matrix layout2 = n2 > 0 ? feature_layout(n2, spec.dim, spec.step) : Matrix(0, spec.dim - 1);
    const RegressionModel first = generating_model(spec, spec.correlation);
    const RegressionModel second = generating_model(spec, flipped(spec.correlation));
    const double sd = std::sqrt(spec.variance);

    Rng rng(spec.seed);
    Matrix features(spec.n, spec.dim - 1);
    Vector targets(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const bool in_first = i < n1;
        const auto x = in_first ? layout1.row(i) : layout2.row(i - n1);
        std::copy(x.begin(), x.end(), features.row(i).begin());
        targets[i] = predict(in_first ? first : second, x) + sd * rng.normal();
    }
    return {std::move(features), std::move(targets)};
}

DataBatch shuffle_segments(const DataBatch& data, std::span<const std::size_t> ends, std::uint64_t seed) {
    if (ends.empty() || ends.back() != data.size()) {
        throw Error(ErrorKind::InvalidArgument, "segment ends must finish at the batch size");
    }
    Rng rng(seed);
    std::vector<std::size_t> order;
    order.reserve(data.size());
    std::size_t begin = 0;
    for (std::size_t end : ends) {
        if (end < begin) {
            throw Error(ErrorKind::InvalidArgument, "segment ends must be non-decreasing");
        }
        for (std::size_t k : rng.permutation(end - begin)) {
            order.push_back(begin + k);
        }
        begin = end;
    }
    return data.select(order);
}

}// namespace olrwa::datagen
