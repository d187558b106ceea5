#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>

namespace hestonlab {

// Dense row-major square matrix with value semantics. Only the 2x2 and 4x4
// sizes are used: the noise/moment factors and their Kronecker products.
template <std::size_t N>
struct Matrix {
    std::array<double, N * N> data{};

    Matrix() = default;
    Matrix(std::initializer_list<std::initializer_list<double>> rows) {
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::size_t j = 0;
            for (double v : row) {
                (*this)(i, j++) = v;
            }
            ++i;
        }
    }

    static constexpr std::size_t size() noexcept { return N; }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data[i * N + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data[i * N + j]; }

    static Matrix identity() noexcept {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
        return m;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& lhs, const Matrix<N>& rhs) noexcept {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t j = 0; j < N; ++j) out(i, j) += lhs(i, k) * rhs(k, j);
    return out;
}

template <std::size_t N>
Matrix<N> operator*(double s, Matrix<N> m) noexcept {
    for (double& v : m.data) v *= s;
    return m;
}

template <std::size_t N>
std::array<double, N> operator*(const Matrix<N>& m, const std::array<double, N>& v) noexcept {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out[i] += m(i, j) * v[j];
    return out;
}

template <std::size_t N>
Matrix<N> transpose(const Matrix<N>& m) noexcept {
    Matrix<N> out;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) out(j, i) = m(i, j);
    return out;
}

inline double determinant(const Mat2& m) noexcept { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Adjugate over determinant; the caller guarantees a nonzero determinant.
inline Mat2 inverse(const Mat2& m) noexcept {
    const double det = determinant(m);
    return Mat2{{m(1, 1) / det, -m(0, 1) / det}, {-m(1, 0) / det, m(0, 0) / det}};
}

// Block (i, j) of the result is lhs(i, j) * rhs.
inline Mat4 kron(const Mat2& lhs, const Mat2& rhs) noexcept {
    Mat4 out;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = lhs(i, j) * rhs(k, l);
    return out;
}

template <std::size_t N>
bool is_symmetric(const Matrix<N>& m, double tol = 0.0) noexcept {
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            if (std::abs(m(i, j) - m(j, i)) > tol) return false;
    return true;
}

// Determinants of the k x k upper-left submatrices, k = 1..N, by Gaussian
// elimination without pivoting (the products of the pivots).
template <std::size_t N>
std::array<double, N> leading_principal_minors(Matrix<N> m) noexcept {
    std::array<double, N> minors{};
    double running = 1.0;
    for (std::size_t k = 0; k < N; ++k) {
        const double pivot = m(k, k);
        running *= pivot;
        minors[k] = running;
        if (pivot == 0.0) {
            for (std::size_t r = k + 1; r < N; ++r) minors[r] = 0.0;
            break;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            const double factor = m(i, k) / pivot;
            for (std::size_t j = k; j < N; ++j) m(i, j) -= factor * m(k, j);
        }
    }
    return minors;
}

}  // namespace hestonlab
