#include "ich/invariants.hpp"

#include <stdexcept>

namespace ich {

RTable::RTable(int n, int order, unsigned long characteristic) : n_(n), order_(order) {
    if (n < 1 || order < 1) throw std::invalid_argument("RTable: n and order must be >= 1");
    auto res = matrix_resolvent(n, order, characteristic);
    TruncSeries detinv = det_one_minus_tA(n, order, characteristic).inverse();
    entries_.resize(static_cast<std::size_t>(order) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            TruncSeries s = res[i][j] * detinv;
            for (int k = 0; k < order; ++k)
                entries_[(static_cast<std::size_t>(k) * n + i) * n + j] = s.at(k);
        }
}

const Poly& RTable::r(int k, int i, int j) const {
    if (k < 0 || k >= order_ || i < 1 || i > n_ || j < 1 || j > n_)
        throw std::out_of_range("RTable: index out of range");
    return entries_[(static_cast<std::size_t>(k) * n_ + (i - 1)) * n_ + (j - 1)];
}

Poly dualize(const Poly& f) {
    return f.rename([](VarId v) {
        if (v.kind != VarKind::A)
            throw std::domain_error("dualize: expected a polynomial function on g, found " + v.str());
        return VarId::e(v.j, v.i);
    });
}

namespace {

// det(t Id - A) as a Poly in t and a[u,v]
Poly char_poly(int n, unsigned long characteristic) {
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly entry = -Poly::var(VarId::a(i + 1, j + 1), 1, characteristic);
            if (i == j) entry += Poly::var(VarId::t(), 1, characteristic);
            m[i][j] = std::move(entry);
        }
    return poly_det(m);
}

}  // namespace

Poly q_invariant(int n, int j, unsigned long characteristic) {
    if (j < 0 || j > n) throw std::out_of_range("q_invariant: j out of range");
    Poly qj = char_poly(n, characteristic).coefficient_of(VarId::t(), static_cast<std::uint32_t>(n - j));
    if (j % 2 == 1) qj = -qj;
    return qj;
}

Poly h_invariant(int n, int k, unsigned long characteristic) {
    if (k < 0) throw std::out_of_range("h_invariant: k out of range");
    // det(1 - tau A)^{-1} truncated just beyond k, read off the tau^k slot
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    Poly tau = Poly::var(VarId::tau(), 1, characteristic);
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj) {
            Poly entry = -(tau * Poly::var(VarId::a(i + 1, jj + 1), 1, characteristic));
            if (i == jj) entry += Poly::constant(Scalar::one(characteristic));
            m[i][jj] = std::move(entry);
        }
    TruncSeries det = TruncSeries::from_poly(poly_det(m), 1, static_cast<std::uint32_t>(k) + 1);
    return det.inverse().at(0, static_cast<std::uint32_t>(k));
}

Poly cprime_top_symbol(int n, int m, int i, unsigned long characteristic) {
    if (i < 1 || i > n) throw std::out_of_range("cprime_top_symbol: i out of range");
    if (m < 1) throw std::out_of_range("cprime_top_symbol: m must be >= 1");
    std::uint32_t tord = static_cast<std::uint32_t>(n) + 1;
    std::uint32_t uord = static_cast<std::uint32_t>(m) + 1;

    // det(t - A): polynomial in t of degree n
    TruncSeries num = TruncSeries::from_poly(char_poly(n, characteristic), tord, uord);

    // -(1 - t tau)^{-1} = -sum_k (t tau)^k
    TruncSeries geo(tord, uord);
    for (std::uint32_t k = 0; k < std::min(tord, uord); ++k)
        geo.set(k, k, Poly::constant(-Scalar::one(characteristic)));

    // det(1 - tau A)^{-1}
    std::vector<std::vector<Poly>> md(n, std::vector<Poly>(n));
    Poly tau = Poly::var(VarId::tau(), 1, characteristic);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            Poly entry = -(tau * Poly::var(VarId::a(u + 1, v + 1), 1, characteristic));
            if (u == v) entry += Poly::constant(Scalar::one(characteristic));
            md[u][v] = std::move(entry);
        }
    TruncSeries detinv = TruncSeries::from_poly(poly_det(md), tord, uord).inverse();

    TruncSeries cprime = num * geo * detinv;
    return cprime.at(static_cast<std::uint32_t>(n - i), static_cast<std::uint32_t>(m));
}

}  // namespace ich
