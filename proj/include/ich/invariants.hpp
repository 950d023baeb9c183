#pragma once

#include <vector>

#include "ich/poly.hpp"
#include "ich/series.hpp"

namespace ich {

/// The coefficients r_k(x_i, y_j)(A) of the pairing series
/// (x, (1-tA)^{-1} y) det(1-tA)^{-1}, for k < order. Entries are
/// polynomial functions on gl_n in the a[u,v] coordinates, and r_k is
/// homogeneous of degree k.
class RTable {
public:
    RTable(int n, int order, unsigned long characteristic = 0);

    int n() const { return n_; }
    int order() const { return order_; }
    /// r_k(x_i, y_j); 1-based i, j.
    const Poly& r(int k, int i, int j) const;

private:
    int n_, order_;
    std::vector<Poly> entries_;  // [k][i][j] flattened
};

/// Trace-pairing identification of functions on g with Sym g:
/// a[u,v] -> e[v,u], extended multiplicatively.
Poly dualize(const Poly& f);

/// Q_j from det(t Id - X) = sum_j (-1)^j t^{n-j} Q_j(X); Q_0 = 1.
Poly q_invariant(int n, int j, unsigned long characteristic = 0);

/// Coefficient of t^{n-i} tau^m in det(t-A) / ((t tau - 1) det(1 - tau A)),
/// expanding (t tau - 1)^{-1} = -sum_k (t tau)^k. Homogeneous of degree m+i.
Poly cprime_top_symbol(int n, int m, int i, unsigned long characteristic = 0);

/// Complete homogeneous invariant h_k = [tau^k] det(1 - tau A)^{-1}.
Poly h_invariant(int n, int k, unsigned long characteristic = 0);

}  // namespace ich
