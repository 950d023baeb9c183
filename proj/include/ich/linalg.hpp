#pragma once

#include <optional>
#include <vector>

#include "ich/scalar.hpp"

namespace ich::linalg {

using Vec = std::vector<Scalar>;
using Mat = std::vector<Scalar>;  // row-major, rows*cols

struct Matrix {
    std::size_t rows = 0, cols = 0;
    Mat a;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, unsigned long characteristic)
        : rows(r), cols(c), a(r * c, Scalar::zero(characteristic)) {}

    Scalar& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

Matrix identity(std::size_t n, unsigned long characteristic);
Matrix mat_mul(const Matrix& x, const Matrix& y);
Vec mat_vec(const Matrix& x, const Vec& v);

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

struct SolveResult {
    bool consistent = false;
    bool unique = false;
    Vec solution;             // a particular solution when consistent
    std::size_t rank = 0;
};

/// Exact solve of a x = b (a: rows x cols, b: rows).
SolveResult solve(const Matrix& a, const Vec& b, unsigned long characteristic);

/// Basis of the right nullspace.
std::vector<Vec> nullspace(const Matrix& a, unsigned long characteristic);

std::optional<Matrix> inverse(const Matrix& m, unsigned long characteristic);

}  // namespace ich::linalg
