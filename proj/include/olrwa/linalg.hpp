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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace olrwa::linalg {

using Vector = std::vector<double>;

/// Absolute pivot magnitude below which a matrix is treated as singular.
inline constexpr double kPivotThreshold = 1e-12;

/// Dense row-major matrix. Sized for the small systems this library solves
/// (normal equations and hyperplane intersections), not for bulk numerics.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    /// Throws InvalidArgument if `entries` has the wrong length or holds a non-finite value.
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const double> diag);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    [[nodiscard]] std::span<const double> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    [[nodiscard]] std::span<double> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
    [[nodiscard]] std::span<const double> entries() const noexcept { return data_; }

    [[nodiscard]] Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> v);
double norm_inf(std::span<const double> v);

/// Gaussian elimination with partial pivoting. Throws SingularMatrix when a
/// pivot falls below kPivotThreshold and DimensionMismatch on bad shapes.
Vector solve_linear(const Matrix& a, std::span<const double> b);

/// Gauss-Jordan inverse with the same pivoting and singularity rule as solve_linear.
Matrix invert(const Matrix& a);

/// Minimum Euclidean norm solution of a·x = b for a with at most as many rows
/// as columns, computed as aᵀ(a aᵀ)⁻¹ b. When a aᵀ is singular, linearly
/// dependent rows are dropped if their right-hand sides agree; otherwise
/// InconsistentSystem is thrown.
Vector min_norm_solution(const Matrix& a, std::span<const double> b);

}// namespace olrwa::linalg
