#pragma once

#include <string>

#include "ich/pbw.hpp"
#include "ich/poly.hpp"

namespace ich {

/// Element of U(gl_n) in the row-major PBW basis e[1,1] < e[1,2] < ... <
/// e[n,n]. Exponent keys are dense row-major vectors of length n^2.
class UgElem {
public:
    UgElem(int n, unsigned long p) : n_(n), p_(p) {}

    static UgElem scalar(int n, unsigned long p, const Scalar& c);
    static UgElem generator(int n, unsigned long p, int i, int j);
    static UgElem monomial(int n, unsigned long p, pbw::GExp exps, const Scalar& c);

    int n() const { return n_; }
    unsigned long characteristic() const { return p_; }
    bool is_zero() const { return t_.empty(); }
    const pbw::UgData& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    void add_term(const pbw::GExp& e, const Scalar& c);
    Scalar coeff(const pbw::GExp& e) const;
    Scalar constant_term() const;

    UgElem& operator+=(const UgElem& o);
    UgElem& operator-=(const UgElem& o);
    friend UgElem operator+(UgElem a, const UgElem& b) { return a += b; }
    friend UgElem operator-(UgElem a, const UgElem& b) { return a -= b; }
    UgElem operator-() const { return scaled(Scalar::integer(-1, p_)); }
    UgElem scaled(const Scalar& c) const;
    bool operator==(const UgElem& o) const { return n_ == o.n_ && p_ == o.p_ && t_ == o.t_; }
    bool operator!=(const UgElem& o) const { return !(*this == o); }

    std::uint32_t degree() const;
    /// Forget the ordering: the PBW monomials as a commutative Poly in e-vars.
    Poly commutative_image() const;
    /// Image of the top-degree part (the principal symbol in Sym g).
    Poly top_symbol() const;

    std::string str() const;

private:
    void match(const UgElem& o) const;

    int n_;
    unsigned long p_;
    pbw::UgData t_;
};

/// PBW-straightened product.
UgElem ug_mul(const UgElem& a, const UgElem& b);
UgElem ug_commutator(const UgElem& a, const UgElem& b);
UgElem ug_pow(const UgElem& a, std::uint32_t k);

/// Canonical symmetrization Sym g -> U(g): each monomial is averaged over
/// all orderings of its letters. Input is a Poly in e-variables. In
/// characteristic p every monomial degree must stay below p.
UgElem symmetrize(const Poly& s, int n, unsigned long p);

/// alpha_i = symmetrize(dualize(Q_i)), a central element of U(gl_n).
UgElem ug_alpha(int n, int i, unsigned long p);

/// True iff [u, e[i,j]] = 0 for all n^2 generators.
bool ug_is_central(const UgElem& u);

}  // namespace ich
