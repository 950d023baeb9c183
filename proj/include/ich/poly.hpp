#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ich/scalar.hpp"
#include "ich/varid.hpp"

namespace ich {

/// Commutative monomial: sorted sparse exponent vector, no zero entries.
class Monomial {
public:
    Monomial() = default;
    static Monomial var(VarId v, std::uint32_t k = 1) {
        Monomial m;
        if (k > 0) m.e_.push_back({v, k});
        return m;
    }

    bool empty() const { return e_.empty(); }
    std::uint32_t degree() const;
    std::uint32_t exponent(VarId v) const;
    Monomial operator*(const Monomial& o) const;
    /// Divide by v^1; exponent must be positive.
    Monomial divide_once(VarId v) const;
    Monomial rename(const std::function<VarId(VarId)>& f) const;
    bool uses_kind(VarKind k) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    /// Dense lexicographic order over the canonical variable sequence.
    bool operator<(const Monomial& o) const;

    const std::vector<std::pair<VarId, std::uint32_t>>& entries() const { return e_; }
    std::string str() const;

private:
    std::vector<std::pair<VarId, std::uint32_t>> e_;
};

/// Sparse multivariate polynomial with exact Scalar coefficients.
class Poly {
public:
    Poly() = default;
    static Poly zero() { return Poly(); }
    static Poly constant(Scalar c);
    static Poly var(VarId v, std::uint32_t k = 1, unsigned long characteristic = 0);
    static Poly term(Monomial m, Scalar c);

    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const std::map<Monomial, Scalar>& terms() const { return t_; }

    Scalar coeff(const Monomial& m, unsigned long characteristic) const;
    Scalar constant_term(unsigned long characteristic) const { return coeff(Monomial(), characteristic); }

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Scalar& c) const;
    Poly pow(std::uint32_t k) const;

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Total degree (0 for the zero polynomial).
    std::uint32_t degree() const;
    /// Degree under per-variable weights; nullopt when zero.
    std::optional<long> weighted_degree(const std::function<long(VarId)>& w) const;
    /// Sum of the top-weight terms.
    Poly top_part(const std::function<long(VarId)>& w) const;
    /// True when every term has the same weight (vacuously true for 0).
    bool is_homogeneous(const std::function<long(VarId)>& w) const;

    /// Coefficient of v^k, with v struck out.
    Poly coefficient_of(VarId v, std::uint32_t k) const;
    /// Largest exponent of v.
    std::uint32_t max_power(VarId v) const;
    Poly derivative(VarId v) const;
    Poly rename(const std::function<VarId(VarId)>& f) const;
    bool uses_kind(VarKind k) const;

    /// Full evaluation; every variable present must be assigned.
    Scalar eval(const std::map<VarId, Scalar>& point, unsigned long characteristic) const;
    /// Partial substitution of the given variables.
    Poly substitute(const std::map<VarId, Scalar>& point) const;

    std::string str() const;

    void add_term(const Monomial& m, const Scalar& c);

private:
    std::map<Monomial, Scalar> t_;
};

/// Exact determinant by cofactor expansion; the size bound guards runaway.
Poly poly_det(const std::vector<std::vector<Poly>>& m, std::size_t size_bound = 4);

}  // namespace ich
