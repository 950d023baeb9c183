#include "ich/linalg.hpp"

#include <stdexcept>

namespace ich::linalg {

Matrix identity(std::size_t n, unsigned long characteristic) {
    Matrix m(n, n, characteristic);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(characteristic);
    return m;
}

Matrix mat_mul(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    unsigned long p = x.a.empty() ? 0 : x.a.front().characteristic();
    Matrix r(x.rows, y.cols, p);
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < x.cols; ++k) {
            if (x.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < y.cols; ++j) {
                Scalar t = x.at(i, k) * y.at(k, j);
                r.at(i, j) += t;
            }
        }
    return r;
}

Vec mat_vec(const Matrix& x, const Vec& v) {
    if (x.cols != v.size()) throw std::invalid_argument("mat_vec: shape mismatch");
    unsigned long p = v.empty() ? 0 : v.front().characteristic();
    Vec r(x.rows, Scalar::zero(p));
    for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t j = 0; j < x.cols; ++j) r[i] += x.at(i, j) * v[j];
    return r;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        std::size_t piv = row;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.a[row * m.cols + j], m.a[piv * m.cols + j]);
        Scalar inv = m.at(row, col).inv();
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Scalar f = m.at(r, col);
            for (std::size_t j = col; j < m.cols; ++j) {
                Scalar t = f * m.at(row, j);
                m.at(r, j) -= t;
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

SolveResult solve(const Matrix& a, const Vec& b, unsigned long characteristic) {
    if (a.rows != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Matrix aug(a.rows, a.cols + 1, characteristic);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols) = b[i];
    }
    auto pivots = rref(aug);
    SolveResult res;
    res.consistent = true;
    for (std::size_t p : pivots)
        if (p == a.cols) res.consistent = false;  // pivot in the rhs column
    res.rank = pivots.size() - (res.consistent ? 0 : 1);
    if (!res.consistent) return res;
    res.unique = (res.rank == a.cols);
    res.solution.assign(a.cols, Scalar::zero(characteristic));
    for (std::size_t r = 0; r < pivots.size(); ++r) res.solution[pivots[r]] = aug.at(r, a.cols);
    return res;
}

std::vector<Vec> nullspace(const Matrix& a, unsigned long characteristic) {
    Matrix m = a;
    auto pivots = rref(m);
    std::vector<bool> is_pivot(a.cols, false);
    for (std::size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < a.cols; ++free) {
        if (is_pivot[free]) continue;
        Vec v(a.cols, Scalar::zero(characteristic));
        v[free] = Scalar::one(characteristic);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m, unsigned long characteristic) {
    if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
    std::size_t n = m.rows;
    Matrix aug(n, 2 * n, characteristic);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar::one(characteristic);
    }
    auto pivots = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n, characteristic);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

}  // namespace ich::linalg
