// Casimir construction: t_i = sum_j [alpha_i, y_j] x_j - c_i, where c_i is
// the unique element of the alpha-monomial span of weighted degree <= m+i
// (zero constant term) making t_i central.
#include <stdexcept>
#include <vector>

#include "ich/cherednik.hpp"
#include "ich/invariants.hpp"
#include "ich/linalg.hpp"

namespace ich {

namespace {

// all (k_1..k_n) >= 0 with sum j*k_j <= bound, excluding the zero vector
std::vector<std::vector<std::uint32_t>> ansatz_exponents(int n, int bound) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> k(n, 0);
    auto rec = [&](auto&& self, int j, int budget) -> void {
        if (j > n) {
            for (auto v : k)
                if (v != 0) {
                    out.push_back(k);
                    return;
                }
            return;  // skip the constant
        }
        for (int kj = 0; kj * j <= budget; ++kj) {
            k[j - 1] = static_cast<std::uint32_t>(kj);
            self(self, j + 1, budget - kj * j);
        }
        k[j - 1] = 0;
    };
    rec(rec, 1, bound);
    return out;
}

}  // namespace

CasimirResult HbContext::compute_casimir(int i) const {
    const unsigned long p = p_;

    // alpha_i and the two defining expressions for s_i
    std::vector<UgElem> alphas;
    for (int j = 1; j <= n_; ++j) alphas.push_back(ug_alpha(n_, j, p));
    HbElem hb_alpha = from_ug(alphas[static_cast<std::size_t>(i) - 1]);

    HbElem s = zero(), s_alt = zero();
    for (int j = 1; j <= n_; ++j) {
        s += mul(commutator(hb_alpha, y(j)), x(j));
        s_alt += mul(y(j), commutator(x(j), hb_alpha));
    }
    if (s != s_alt)
        throw std::runtime_error("casimir: the two defining expressions disagree (rewriting bug)");

    // ansatz basis: alpha monomials of weighted degree <= m+i, constant excluded
    auto exponents = ansatz_exponents(n_, m_ + i);
    std::vector<UgElem> basis_ug;
    std::vector<HbElem> basis_hb;
    for (const auto& k : exponents) {
        UgElem mono = UgElem::scalar(n_, p, Scalar::one(p));
        for (int j = 1; j <= n_; ++j)
            if (k[j - 1] > 0) mono = ug_mul(mono, ug_pow(alphas[j - 1], k[j - 1]));
        basis_ug.push_back(mono);
        basis_hb.push_back(from_ug(mono));
    }
    const std::size_t dim = basis_ug.size();

    // centrality against x_k and y_k: [c, gen] = [s, gen]
    std::vector<pbw::Gen> eq_gens;
    for (int k = 1; k <= n_; ++k) eq_gens.push_back(pbw::Gen::x(k));
    for (int k = 1; k <= n_; ++k) eq_gens.push_back(pbw::Gen::y(k));

    std::vector<std::vector<HbElem>> cols;  // [gen][mu]
    std::vector<HbElem> rhs;
    for (const auto& g : eq_gens) {
        HbElem ge = from_gen(g);
        std::vector<HbElem> col;
        for (const auto& b : basis_hb) col.push_back(commutator(b, ge));
        cols.push_back(std::move(col));
        rhs.push_back(commutator(s, ge));
    }

    // assemble the exact linear system over the union of monomial supports
    std::size_t rows = 0;
    std::vector<std::vector<HbMonomial>> supports;
    for (std::size_t g = 0; g < eq_gens.size(); ++g) {
        std::map<HbMonomial, char> support;
        for (const auto& col : cols[g])
            for (const auto& [mono, c] : col.terms()) support[mono] = 1;
        for (const auto& [mono, c] : rhs[g].terms()) support[mono] = 1;
        std::vector<HbMonomial> list;
        for (const auto& [mono, _] : support) list.push_back(mono);
        rows += list.size();
        supports.push_back(std::move(list));
    }

    linalg::Matrix A(rows, dim, p);
    linalg::Vec bvec(rows, Scalar::zero(p));
    std::size_t r = 0;
    for (std::size_t g = 0; g < eq_gens.size(); ++g) {
        for (const auto& mono : supports[g]) {
            for (std::size_t mu = 0; mu < dim; ++mu) A.at(r, mu) = cols[g][mu].coeff(mono);
            bvec[r] = rhs[g].coeff(mono);
            ++r;
        }
    }

    auto sol = linalg::solve(A, bvec, p);
    if (!sol.consistent)
        throw std::runtime_error("casimir: centrality system inconsistent (implementation bug)");
    if (!sol.unique)
        throw std::runtime_error("casimir: centrality system underdetermined (ansatz bound wrong)");

    UgElem c(n_, p);
    for (std::size_t mu = 0; mu < dim; ++mu) c += basis_ug[mu].scaled(sol.solution[mu]);
    if (!c.constant_term().is_zero())
        throw std::runtime_error("casimir: constant-term normalization violated");

    CasimirResult res{zero(), c, 0, static_cast<int>(dim), static_cast<int>(sol.rank)};
    res.t = s - from_ug(c);

    // postconditions
    if (!is_central(res.t)) throw std::runtime_error("casimir: output fails the centrality sweep");
    Poly target = dualize(cprime_top_symbol(n_, m_, i, p));
    Poly sym_c = c.top_symbol();
    if (sym_c == target)
        res.sign = 1;
    else if (sym_c == -target)
        res.sign = -1;
    else
        throw std::runtime_error("casimir: top symbol does not match the generating-function coefficient");
    return res;
}

}  // namespace ich
