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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace olrwa;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an olrwa::Error";
    return ErrorKind::InvalidArgument;
}

Vector unit(Vector v) {
    const double n = linalg::norm2(v);
    for (auto& x : v) {
        x /= n;
    }
    return v;
}

Vector random_unit(std::mt19937_64& gen, std::size_t n) {
    std::normal_distribution<double> g;
    Vector v(n);
    for (auto& x : v) {
        x = g(gen);
    }
    return unit(v);
}

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

}// namespace

TEST(ModelToHyperplane, IdentityLine) {
    const Hyperplane h = model_to_hyperplane({0, {1}}, Vector{0});
    EXPECT_NEAR(h.normal[0], kInvSqrt2, 1e-15);
    EXPECT_NEAR(h.normal[1], -kInvSqrt2, 1e-15);
    EXPECT_EQ(h.anchor, (Vector{0, 0}));
}

TEST(ModelToHyperplane, TextbookPlaneNormal) {
    // 13x + 3y − 6z = 15 solved for z.
    const RegressionModel m{-15.0 / 6.0, {13.0 / 6.0, 3.0 / 6.0}};
    const Hyperplane h = model_to_hyperplane(m, Vector{1.0, 2.0});
    const Vector expected = unit({13, 3, -6});
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_NEAR(h.normal[i], expected[i], 1e-15);
    }
    // Anchor satisfies the original equation.
    EXPECT_NEAR(13 * h.anchor[0] + 3 * h.anchor[1] - 6 * h.anchor[2], 15.0, 1e-12);
}

TEST(ModelToHyperplane, HorizontalLine) {
    const Hyperplane h = model_to_hyperplane({3, {0}}, Vector{4.5});
    EXPECT_EQ(h.normal, (Vector{0, -1}));
    EXPECT_EQ(h.anchor, (Vector{4.5, 3}));
}

TEST(ModelToHyperplane, OffsetPutsAnchorOnPlane) {
    const Hyperplane h = model_to_hyperplane({2, {-1, 0.5}}, Vector{3, 4});
    EXPECT_NEAR(linalg::dot(h.normal, h.anchor) + h.offset(), 0.0, 1e-15);
}

TEST(HyperplaneToModel, IdentityLineRoundTrip) {
    const RegressionModel m = hyperplane_to_model({{kInvSqrt2, -kInvSqrt2}, {0, 0}});
    EXPECT_NEAR(m.intercept, 0.0, 1e-15);
    EXPECT_NEAR(m.coefficients[0], 1.0, 1e-15);
}

TEST(HyperplaneToModel, VerticalIsDegenerate) {
    EXPECT_EQ(kind_of([] { hyperplane_to_model({{1, 0}, {5, 7}}); }), ErrorKind::DegenerateHyperplane);
}

TEST(HyperplaneToModel, TextbookPlane) {
    const RegressionModel m = hyperplane_to_model({unit({13, 3, -6}), {0, 0, -2.5}});
    EXPECT_NEAR(m.intercept, -2.5, 1e-12);
    EXPECT_NEAR(m.coefficients[0], 13.0 / 6.0, 1e-12);
    EXPECT_NEAR(m.coefficients[1], 0.5, 1e-12);
}

TEST(HyperplaneToModel, RoundTripProperty) {
    std::mt19937_64 gen(31);
    std::uniform_real_distribution<double> coef(-100.0, 100.0);
    std::uniform_real_distribution<double> feat(-50.0, 50.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t m = 1 + trial % 4;
        RegressionModel model{coef(gen), Vector(m)};
        Vector x0(m);
        for (std::size_t i = 0; i < m; ++i) {
            model.coefficients[i] = coef(gen);
            x0[i] = feat(gen);
        }
        const RegressionModel back = hyperplane_to_model(model_to_hyperplane(model, x0));
        ASSERT_NEAR(back.intercept, model.intercept, 1e-9);
        for (std::size_t i = 0; i < m; ++i) {
            ASSERT_NEAR(back.coefficients[i], model.coefficients[i], 1e-9);
        }
    }
}

TEST(WeightedAverageNormal, EqualWeightsBisect) {
    const Vector v = weighted_average_normal(Vector{1, 0}, Vector{0, -1}, 1.0, 1.0, +1);
    EXPECT_NEAR(v[0], kInvSqrt2, 1e-15);
    EXPECT_NEAR(v[1], -kInvSqrt2, 1e-15);
}

TEST(WeightedAverageNormal, DominantIncrementalWeight) {
    std::mt19937_64 gen(37);
    for (int trial = 0; trial < 100; ++trial) {
        Vector inc = random_unit(gen, 3);
        if (inc[2] > 0) {
            for (auto& x : inc) {
                x = -x;
            }
        }
        const Vector base = random_unit(gen, 3);
        for (int sign : {+1, -1}) {
            const Vector v = weighted_average_normal(base, inc, 1.0, 1e9, sign);
            for (std::size_t i = 0; i < 3; ++i) {
                ASSERT_NEAR(v[i], inc[i], 1e-8);
            }
        }
    }
}

TEST(WeightedAverageNormal, ExactCancellation) {
    const Vector v = unit({1, -2});
    EXPECT_EQ(kind_of([&] { weighted_average_normal(v, v, 1.0, 1.0, -1); }), ErrorKind::ZeroAverage);
}

TEST(WeightedAverageNormal, RejectsBadInputs) {
    EXPECT_EQ(kind_of([] { weighted_average_normal(Vector{1, 0}, Vector{0, -1}, 0.0, 1.0, 1); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { weighted_average_normal(Vector{2, 0}, Vector{0, -1}, 1.0, 1.0, 1); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { weighted_average_normal(Vector{1, 0}, Vector{0, -1}, 1.0, 1.0, 0); }), ErrorKind::InvalidArgument);
    EXPECT_EQ(kind_of([] { weighted_average_normal(Vector{1, 0}, Vector{0, 0, -1}, 1.0, 1.0, 1); }), ErrorKind::DimensionMismatch);
}

TEST(WeightedAverageNormal, ScaleInvarianceUnitLengthCanonicalSign) {
    std::mt19937_64 gen(41);
    std::uniform_real_distribution<double> w(0.01, 50.0);
    std::uniform_real_distribution<double> scale(1e-3, 1e3);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 2 + trial % 4;
        const Vector a = random_unit(gen, n);
        const Vector b = random_unit(gen, n);
        const double wb = w(gen);
        const double wi = w(gen);
        const double c = scale(gen);
        const int sign = trial % 2 == 0 ? 1 : -1;
        const Vector v = weighted_average_normal(a, b, wb, wi, sign);
        const Vector vc = weighted_average_normal(a, b, c * wb, c * wi, sign);
        ASSERT_NEAR(linalg::norm2(v), 1.0, 1e-12);
        ASSERT_LE(v.back(), 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            ASSERT_NEAR(v[i], vc[i], 1e-12);
        }
    }
}

TEST(IntersectionPoint, CrossingLines) {
    const Hyperplane up = model_to_hyperplane({0, {1}}, Vector{3});
    const Hyperplane down = model_to_hyperplane({0, {-1}}, Vector{-2});
    const Vector p = intersection_point(up, down);
    EXPECT_NEAR(p[0], 0.0, 1e-12);
    EXPECT_NEAR(p[1], 0.0, 1e-12);
}

TEST(IntersectionPoint, ParallelLines) {
    const Hyperplane a = model_to_hyperplane({0, {1}}, Vector{0});
    const Hyperplane b = model_to_hyperplane({1, {1}}, Vector{0});
    EXPECT_EQ(kind_of([&] { intersection_point(a, b); }), ErrorKind::ParallelHyperplanes);
}

TEST(IntersectionPoint, TwoPlanesThroughOrigin) {
    const Hyperplane zx = model_to_hyperplane({0, {1, 0}}, Vector{1, 2});
    const Hyperplane zy = model_to_hyperplane({0, {0, 1}}, Vector{-1, 5});
    const Vector p = intersection_point(zx, zy);
    for (double v : p) {
        EXPECT_NEAR(v, 0.0, 1e-12);
    }
}

TEST(IntersectionPoint, CoincidentGivesMinNormPointOfPlane) {
    // y = 2 + x written from two different anchors.
    const Hyperplane a = model_to_hyperplane({2, {1}}, Vector{0});
    const Hyperplane b = model_to_hyperplane({2, {1}}, Vector{10});
    const Vector p = intersection_point(a, b);
    // Closest point of x − y = −2 to the origin is (−1, 1).
    EXPECT_NEAR(p[0], -1.0, 1e-12);
    EXPECT_NEAR(p[1], 1.0, 1e-12);
}

TEST(IntersectionPoint, LiesOnBothRandomHyperplanes) {
    std::mt19937_64 gen(43);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 1 + trial % 4;
        RegressionModel a{u(gen), Vector(m)};
        RegressionModel b{u(gen), Vector(m)};
        Vector xa(m);
        Vector xb(m);
        for (std::size_t i = 0; i < m; ++i) {
            a.coefficients[i] = u(gen);
            b.coefficients[i] = u(gen);
            xa[i] = u(gen);
            xb[i] = u(gen);
        }
        const Hyperplane ha = model_to_hyperplane(a, xa);
        const Hyperplane hb = model_to_hyperplane(b, xb);
        const Vector p = intersection_point(ha, hb);
        const Vector feats(p.begin(), p.end() - 1);
        const double scale = std::max(1.0, linalg::norm_inf(p));
        ASSERT_NEAR(predict(a, feats), p.back(), 1e-9 * scale);
        ASSERT_NEAR(predict(b, feats), p.back(), 1e-9 * scale);
    }
}
