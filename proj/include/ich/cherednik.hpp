#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "ich/envelope.hpp"
#include "ich/pbw.hpp"
#include "ich/poly.hpp"

namespace ich {

/// Filtrations of H_b. Standard: deg x = deg y = 1, deg g = 0 (the PBW
/// filtration). Weighted: deg x = m, deg y = 1, deg g = 1 (whose associated
/// graded is the Poisson algebra A_m). GOnly: deg g = 1, deg x = deg y = 0.
enum class Filtration { Standard, Weighted, GOnly };

/// Normal monomial x^a g^c y^b; the g block is indexed by the triangular
/// basis rank (strictly lower row-major, then diagonal, then strictly upper).
using HbMonomial = pbw::TriExp;

/// Element of H_b as a sparse map from triangular PBW monomials to Scalars.
class HbElem {
public:
    HbElem(int n, unsigned long p) : n_(n), p_(p) {}

    int n() const { return n_; }
    unsigned long characteristic() const { return p_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }
    const pbw::Elem& terms() const { return t_; }

    void add_term(const HbMonomial& m, const Scalar& c);
    Scalar coeff(const HbMonomial& m) const;
    /// Coefficient of the empty monomial.
    Scalar scalar_part() const;
    bool is_scalar() const;

    HbElem& operator+=(const HbElem& o);
    HbElem& operator-=(const HbElem& o);
    friend HbElem operator+(HbElem a, const HbElem& b) { return a += b; }
    friend HbElem operator-(HbElem a, const HbElem& b) { return a -= b; }
    HbElem operator-() const { return scaled(Scalar::integer(-1, p_)); }
    HbElem scaled(const Scalar& c) const;
    bool operator==(const HbElem& o) const { return n_ == o.n_ && p_ == o.p_ && t_ == o.t_; }
    bool operator!=(const HbElem& o) const { return !(*this == o); }

    std::uint32_t total_degree() const;

private:
    void match(const HbElem& o) const;

    int n_;
    unsigned long p_;
    pbw::Elem t_;
};

struct CasimirResult {
    HbElem t;        // the central element t_i
    UgElem c;        // the correction c_i in Z(U(g)), constant term 0
    int sign;        // top symbol of c_i = sign * dualize(cprime coefficient)
    int ansatz_dim;  // dimension of the alpha-monomial ansatz (constant excluded)
    int solve_rank;  // rank of the centrality system
};

/// The infinitesimal Cherednik algebra H_b of gl_n with monic deformation
/// parameter b = b_0 + b_1 tau + ... + tau^m. Immutable after construction
/// and shareable across threads; all operations are pure given the context.
class HbContext {
public:
    HbContext(int n, int m, std::vector<Scalar> b, unsigned long p = 0);
    HbContext(const HbContext&) = delete;
    HbContext& operator=(const HbContext&) = delete;

    int n() const { return n_; }
    int m() const { return m_; }
    unsigned long characteristic() const { return p_; }
    const std::vector<Scalar>& b() const { return b_; }
    /// Conservative "p large enough" flag: p > 2(n+m+3).
    bool conservative_prime_bound() const;

    /// Precomputed [y_i, x_j] in U(gl_n); 1-based indices.
    const UgElem& bracket(int i, int j) const;

    int g_rank(int i, int j) const { return cfg_left_.rank_of_rm[(i - 1) * n_ + (j - 1)]; }
    std::pair<int, int> g_pair(int rank) const { return cfg_left_.pair_of_rank[rank]; }

    HbElem zero() const { return HbElem(n_, p_); }
    HbElem scalar(const Scalar& c) const;
    HbElem one() const { return scalar(Scalar::one(p_)); }
    HbElem x(int i) const;
    HbElem y(int i) const;
    HbElem e(int i, int j) const;
    HbElem monomial(const HbMonomial& m, const Scalar& c) const;
    HbElem from_ug(const UgElem& u) const;
    HbElem from_gen(const pbw::Gen& g) const;

    /// All 2n + n^2 generators: x_1..x_n, e[1,1]..e[n,n] row-major, y_1..y_n.
    std::vector<pbw::Gen> generator_list() const;

    HbElem normal_form_word(const pbw::Word& w, const Scalar& coeff,
                            pbw::Strategy s = pbw::Strategy::Leftmost) const;

    /// Normal-form product. Dispatches to the OpenMP kernel for large
    /// operands; results are identical to mul_serial (exact arithmetic).
    HbElem mul(const HbElem& a, const HbElem& b) const;
    /// Serial reference kernel.
    HbElem mul_serial(const HbElem& a, const HbElem& b) const;
    HbElem commutator(const HbElem& a, const HbElem& b) const;
    HbElem pow(const HbElem& a, std::uint32_t k) const;  // repeated squaring

    /// True iff a commutes with every generator.
    bool is_central(const HbElem& a) const;

    long generator_weight(const pbw::Gen& g, Filtration f) const;
    long monomial_weight(const HbMonomial& m, Filtration f) const;
    long filtration_degree(const HbElem& a, Filtration f) const;
    /// Top-weight part as a commutative polynomial in e/x/y variables.
    Poly symbol(const HbElem& a, Filtration f) const;

    /// exp(ad v) for v a pure x-linear or pure y-linear element; a finite
    /// sum by local nilpotency, and an algebra automorphism.
    HbElem exp_ad(const HbElem& v, const HbElem& a) const;

    /// Casimir t_i with its correction c_i; cached per context.
    const CasimirResult& casimir(int i) const;

    struct PbwCheckDetail {
        bool counts_ok = false;
        bool confluence_ok = false;
        std::uint64_t monomials = 0;  // of total degree <= d
        std::uint64_t expected = 0;
        int words_checked = 0;
    };
    /// (a) graded monomial counts match C(n^2+2n+d, d); (b) seeded random
    /// words of length <= d normalize identically under both strategies.
    PbwCheckDetail pbw_dimension_detail(int d, std::uint64_t seed, int nwords = 64) const;
    bool pbw_dimension_check(int d, std::uint64_t seed, int nwords = 64) const;

    const pbw::Config& config(pbw::Strategy s = pbw::Strategy::Leftmost) const {
        return s == pbw::Strategy::Leftmost ? cfg_left_ : cfg_right_;
    }

private:
    int n_, m_;
    unsigned long p_;
    std::vector<Scalar> b_;
    std::vector<std::vector<UgElem>> yx_;
    std::vector<std::vector<pbw::UgData>> yx_data_;
    pbw::Config cfg_left_, cfg_right_;

    mutable std::mutex cas_mu_;
    mutable std::map<int, CasimirResult> cas_;

    CasimirResult compute_casimir(int i) const;
};

}  // namespace ich
