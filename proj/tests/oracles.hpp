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

// Reference implementations used only by tests. Slow but independent of the
// library's elimination code: determinants by cofactor expansion, sums in
// long double.

#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using LMatrix = std::vector<std::vector<long double>>;

inline long double determinant(const LMatrix& a) {
    const std::size_t n = a.size();
    if (n == 1) {
        return a[0][0];
    }
    if (n == 2) {
        return a[0][0] * a[1][1] - a[0][1] * a[1][0];
    }
    long double det = 0.0L;
    for (std::size_t col = 0; col < n; ++col) {
        LMatrix minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<long double> row;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != col) {
                    row.push_back(a[r][c]);
                }
            }
            minor.push_back(row);
        }
        const long double sign = (col % 2 == 0) ? 1.0L : -1.0L;
        det += sign * a[0][col] * determinant(minor);
    }
    return det;
}

/// Solves a·x = b by Cramer's rule.
inline std::vector<long double> cramer(const LMatrix& a, const std::vector<long double>& b) {
    const long double det = determinant(a);
    std::vector<long double> x(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        LMatrix ak = a;
        for (std::size_t r = 0; r < a.size(); ++r) {
            ak[r][k] = b[r];
        }
        x[k] = determinant(ak) / det;
    }
    return x;
}

/// Least-squares coefficients (intercept first) for rows `x` and targets `y`,
/// from the normal equations accumulated in long double and solved by Cramer's rule.
inline std::vector<long double> least_squares(const std::vector<std::vector<double>>& x, const std::vector<double>& y) {
    const std::size_t p = x.front().size() + 1;
    LMatrix xtx(p, std::vector<long double>(p, 0.0L));
    std::vector<long double> xty(p, 0.0L);
    for (std::size_t i = 0; i < x.size(); ++i) {
        std::vector<long double> row{1.0L};
        for (double v : x[i]) {
            row.push_back(v);
        }
        for (std::size_t a = 0; a < p; ++a) {
            xty[a] += row[a] * y[i];
            for (std::size_t b = 0; b < p; ++b) {
                xtx[a][b] += row[a] * row[b];
            }
        }
    }
    return cramer(xtx, xty);
}

/// Mean squared error of y ≈ intercept + Σ coef·x, enumerated point by point.
inline long double mse(long double intercept, const std::vector<long double>& coef, const std::vector<std::vector<double>>& x,
                       const std::vector<double>& y) {
    long double sse = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        long double pred = intercept;
        for (std::size_t j = 0; j < coef.size(); ++j) {
            pred += coef[j] * x[i][j];
        }
        const long double r = y[i] - pred;
        sse += r * r;
    }
    return sse / static_cast<long double>(x.size());
}

}// namespace oracle
