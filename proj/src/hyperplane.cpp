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
#include <olrwa/hyperplane.hpp>

#include <algorithm>
#include <cmath>
#include <string>

namespace olrwa {

namespace {

constexpr double kZeroAverageNorm = 1e-12;
constexpr double kUnitTolerance = 1e-9;

void require_unit(std::span<const double> v, const char* name) {
    const double n = linalg::norm2(v);
    if (std::abs(n - 1.0) > kUnitTolerance) {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be unit length, has norm " + std::to_string(n));
    }
}

void require_same_space(const Hyperplane& h1, const Hyperplane& h2) {
    if (h1.normal.size() != h2.normal.size() || h1.anchor.size() != h1.normal.size() ||
        h2.anchor.size() != h2.normal.size()) {
        throw Error(ErrorKind::DimensionMismatch, "hyperplanes live in different spaces");
    }
}

}// namespace

Hyperplane model_to_hyperplane(const RegressionModel& model, std::span<const double> anchor_features) {
    const double target = predict(model, anchor_features);

    Hyperplane h;
    h.normal.assign(model.coefficients.begin(), model.coefficients.end());
    h.normal.push_back(-1.0);
    const double len = linalg::norm2(h.normal);
    for (double& v : h.normal) {
        v /= len;
    }
    h.anchor.assign(anchor_features.begin(), anchor_features.end());
    h.anchor.push_back(target);
    return h;
}

RegressionModel hyperplane_to_model(const Hyperplane& h, const GeometryTolerances& tol) {
    if (h.normal.size() < 2 || h.anchor.size() != h.normal.size()) {
        throw Error(ErrorKind::DimensionMismatch, "hyperplane needs matching normal and anchor with at least 2 components");
    }
    const std::size_t m = h.dimension();
    const double ny = h.normal[m];
    if (std::abs(ny) < tol.vertical) {
        throw Error(ErrorKind::DegenerateHyperplane, "target component " + std::to_string(ny) + " is too small");
    }

    RegressionModel model;
    model.coefficients.resize(m);
    double intercept = h.anchor[m];
    for (std::size_t i = 0; i < m; ++i) {
        model.coefficients[i] = -h.normal[i] / ny;
        intercept -= model.coefficients[i] * h.anchor[i];
    }
    model.intercept = intercept;
    return model;
}

Vector weighted_average_normal(std::span<const double> v_base, std::span<const double> v_inc, double w_base, double w_inc,
                               int base_sign) {
    if (v_base.size() != v_inc.size()) {
        throw Error(ErrorKind::DimensionMismatch, "normals have different lengths");
    }
    if (!(w_base > 0.0) || !(w_inc > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "weights must be positive");
    }
    if (base_sign != 1 && base_sign != -1) {
        throw Error(ErrorKind::InvalidArgument, "base_sign must be +1 or -1");
    }
    require_unit(v_base, "v_base");
    require_unit(v_inc, "v_inc");

    const double total = w_base + w_inc;
    const double wb = static_cast<double>(base_sign) * w_base;
    Vector avg(v_base.size());
    for (std::size_t i = 0; i < avg.size(); ++i) {
        avg[i] = (wb * v_base[i] + w_inc * v_inc[i]) / total;
    }
    const double len = linalg::norm2(avg);
    if (len < kZeroAverageNorm) {
        throw Error(ErrorKind::ZeroAverage, "weighted normals cancel out");
    }
    const double scale = avg.back() > 0.0 ? -1.0 / len : 1.0 / len;
    for (double& v : avg) {
        v *= scale;
    }
    return avg;
}

Vector intersection_point(const Hyperplane& h1, const Hyperplane& h2, const GeometryTolerances& tol) {
    require_same_space(h1, h2);
    const std::size_t n = h1.normal.size();
    const double d1 = linalg::dot(h1.normal, h1.anchor);
    const double d2 = linalg::dot(h2.normal, h2.anchor);
    const double cosine = linalg::dot(h1.normal, h2.normal);

    if (std::abs(cosine) > 1.0 - tol.parallel) {
        const double d2_aligned = cosine > 0.0 ? d2 : -d2;
        const double scale = std::max({1.0, std::abs(d1), std::abs(d2)});
        if (std::abs(d1 - d2_aligned) > tol.coincident * scale) {
            throw Error(ErrorKind::ParallelHyperplanes, "hyperplanes are parallel with offsets " + std::to_string(d1) +
                                                            " and " + std::to_string(d2_aligned));
        }
        return linalg::min_norm_solution(Matrix(1, n, h1.normal), std::vector<double>{d1});
    }

    std::vector<double> rows(h1.normal);
    rows.insert(rows.end(), h2.normal.begin(), h2.normal.end());
    const std::vector<double> rhs{d1, d2};
    try {
        return linalg::min_norm_solution(Matrix(2, n, std::move(rows)), rhs);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::InconsistentSystem || e.kind() == ErrorKind::SingularMatrix) {
            throw Error(ErrorKind::ParallelHyperplanes, e.what());
        }
        throw;
    }
}

}// namespace olrwa
