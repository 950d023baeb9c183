#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ich/poly.hpp"

namespace ich {

/// Truncated power series in t and tau with Poly coefficients. Orders are
/// exclusive bounds; arithmetic discards any power at or above them. A
/// univariate series in t is the tau_order == 1 case.
class TruncSeries {
public:
    TruncSeries(std::uint32_t t_order, std::uint32_t tau_order = 1);

    static TruncSeries constant(const Poly& c, std::uint32_t t_order, std::uint32_t tau_order = 1);
    /// Split a Poly containing t/tau variables into series coefficients.
    static TruncSeries from_poly(const Poly& p, std::uint32_t t_order, std::uint32_t tau_order = 1);

    std::uint32_t t_order() const { return tord_; }
    std::uint32_t tau_order() const { return uord_; }

    void set(std::uint32_t kt, std::uint32_t ktau, Poly c);
    /// Coefficient of t^kt tau^ktau (zero polynomial when absent).
    const Poly& at(std::uint32_t kt, std::uint32_t ktau = 0) const;

    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    TruncSeries operator*(const TruncSeries& o) const;
    TruncSeries scaled(const Scalar& c) const;

    bool operator==(const TruncSeries& o) const;
    bool is_one() const;

    /// Multiplicative inverse; the constant coefficient must be a nonzero
    /// Scalar (a unit of the coefficient ring).
    TruncSeries inverse() const;

    std::string str() const;

private:
    unsigned long scalar_char() const;

    std::uint32_t tord_, uord_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> c_;
};

/// Entry (i,j) of (1 - tA)^{-1} = sum_k t^k A^k for the n x n matrix of
/// coordinate variables a[u,v], truncated below the given order.
std::vector<std::vector<TruncSeries>> matrix_resolvent(int n, std::uint32_t order,
                                                       unsigned long characteristic = 0);

/// det(1 - tA) as a truncated series in t (a polynomial of degree n).
TruncSeries det_one_minus_tA(int n, std::uint32_t order, unsigned long characteristic = 0);

}  // namespace ich
