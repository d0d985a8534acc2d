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
#include <olrwa/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace olrwa::linalg {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + " needs a square matrix, got " + shape(a.rows(), a.cols()));
    }
}

// Forward elimination with partial pivoting on `a`, applying the same row
// operations to every column of `rhs`. Leaves `a` upper triangular.
void eliminate(Matrix& a, Matrix& rhs) {
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            if (std::abs(a(r, k)) > best) {
                best = std::abs(a(r, k));
                pivot = r;
            }
        }
        if (best < kPivotThreshold) {
            throw Error(ErrorKind::SingularMatrix,
                        "pivot " + std::to_string(best) + " in column " + std::to_string(k) + " is below threshold");
        }
        if (pivot != k) {
            std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(pivot).begin());
            std::swap_ranges(rhs.row(k).begin(), rhs.row(k).end(), rhs.row(pivot).begin());
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            const double factor = a(r, k) / a(k, k);
            if (factor == 0.0) {
                continue;
            }
            a(r, k) = 0.0;
            for (std::size_t c = k + 1; c < n; ++c) {
                a(r, c) -= factor * a(k, c);
            }
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                rhs(r, c) -= factor * rhs(k, c);
            }
        }
    }
}

// Back substitution for every column of `rhs` against upper-triangular `u`.
Matrix back_substitute(const Matrix& u, const Matrix& rhs) {
    const std::size_t n = u.rows();
    Matrix x(n, rhs.cols());
    for (std::size_t c = 0; c < rhs.cols(); ++c) {
        for (std::size_t i = n; i-- > 0;) {
            double acc = rhs(i, c);
            for (std::size_t j = i + 1; j < n; ++j) {
                acc -= u(i, j) * x(j, c);
            }
            x(i, c) = acc / u(i, i);
        }
    }
    return x;
}

Matrix gram(const Matrix& a) {
    Matrix g(a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const double v = dot(a.row(i), a.row(j));
            g(i, j) = v;
            g(j, i) = v;
        }
    }
    return g;
}

Vector min_norm_full_rank(const Matrix& a, std::span<const double> b) {
    const Vector y = solve_linear(gram(a), b);
    Vector x(a.cols(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            x[c] += a(i, c) * y[i];
        }
    }
    return x;
}

}// namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw Error(ErrorKind::InvalidArgument,
                    "matrix " + shape(rows_, cols_) + " given " + std::to_string(data_.size()) + " entries");
    }
    if (!std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); })) {
        throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw Error(ErrorKind::InvalidArgument, "ragged matrix initializer");
        }
        data_.insert(data_.end(), r.begin(), r.end());
    }
    if (!std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); })) {
        throw Error(ErrorKind::InvalidArgument, "matrix entries must be finite");
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        m(i, i) = diag[i];
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + shape(a.rows(), a.cols()) + " by " + shape(b.rows(), b.cols()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + shape(a.rows(), a.cols()) + " by vector of length " + std::to_string(x.size()));
    }
    Vector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        out[i] = dot(a.row(i), x);
    }
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw Error(ErrorKind::DimensionMismatch, "dot of lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double norm2(std::span<const double> v) { return std::sqrt(dot(v, v)); }

double norm_inf(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) {
        m = std::max(m, std::abs(x));
    }
    return m;
}

Vector solve_linear(const Matrix& a, std::span<const double> b) {
    require_square(a, "solve_linear");
    if (b.size() != a.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "right-hand side length " + std::to_string(b.size()) + " for " + shape(a.rows(), a.cols()) + " system");
    }
    Matrix work = a;
    Matrix rhs(b.size(), 1, Vector(b.begin(), b.end()));
    eliminate(work, rhs);
    const Matrix x = back_substitute(work, rhs);
    return {x.entries().begin(), x.entries().end()};
}

Matrix invert(const Matrix& a) {
    require_square(a, "invert");
    Matrix work = a;
    Matrix rhs = Matrix::identity(a.rows());
    eliminate(work, rhs);
    return back_substitute(work, rhs);
}

Vector min_norm_solution(const Matrix& a, std::span<const double> b) {
    if (b.size() != a.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "right-hand side length " + std::to_string(b.size()) + " for " + shape(a.rows(), a.cols()) + " system");
    }
    if (a.rows() > a.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "min_norm_solution needs rows <= cols, got " + shape(a.rows(), a.cols()));
    }
    if (a.rows() == 0) {
        return Vector(a.cols(), 0.0);
    }
    try {
        return min_norm_full_rank(a, b);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::SingularMatrix) {
            throw;
        }
    }

    // Rank deficient: orthogonalise rows in order (modified Gram-Schmidt),
    // carrying the right-hand side along. A row whose residual vanishes is a
    // combination of earlier rows and must have a vanishing residual offset.
    const double b_scale = std::max(1.0, norm_inf(b));
    std::vector<Vector> basis;
    Vector basis_rhs;
    std::vector<std::size_t> independent;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Vector r(a.row(i).begin(), a.row(i).end());
        double rhs = b[i];
        const double row_norm = norm2(r);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const double proj = dot(basis[k], r);
            for (std::size_t c = 0; c < r.size(); ++c) {
                r[c] -= proj * basis[k][c];
            }
            rhs -= proj * basis_rhs[k];
        }
        const double residual = norm2(r);
        // Same scale as kPivotThreshold on the Gram matrix, which holds squared norms.
        if (residual <= std::sqrt(kPivotThreshold) * std::max(row_norm, 1e-300)) {
            if (std::abs(rhs) > 1e-9 * b_scale) {
                throw Error(ErrorKind::InconsistentSystem, "row " + std::to_string(i) + " is dependent on earlier rows but its right-hand side disagrees");
            }
            continue;
        }
        for (double& v : r) {
            v /= residual;
        }
        basis.push_back(std::move(r));
        basis_rhs.push_back(rhs / residual);
        independent.push_back(i);
    }

    Matrix reduced(independent.size(), a.cols());
    Vector reduced_b(independent.size());
    for (std::size_t k = 0; k < independent.size(); ++k) {
        std::copy(a.row(independent[k]).begin(), a.row(independent[k]).end(), reduced.row(k).begin());
        reduced_b[k] = b[independent[k]];
    }
    if (reduced.rows() == 0) {
        return Vector(a.cols(), 0.0);
    }
    return min_norm_full_rank(reduced, reduced_b);
}

}// namespace olrwa::linalg
