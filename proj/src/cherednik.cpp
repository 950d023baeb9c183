#include "ich/cherednik.hpp"

#include <algorithm>
#include <stdexcept>

#include "ich/invariants.hpp"
#include "ich/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ich {

namespace {

HbMonomial empty_monomial(int n) {
    return HbMonomial{std::vector<std::uint32_t>(n, 0), std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n, 0),
                      std::vector<std::uint32_t>(n, 0)};
}

}  // namespace

void HbElem::add_term(const HbMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.characteristic() != p_) throw std::domain_error("HbElem: characteristic mismatch");
    pbw::add_into(t_, m, c);
}

Scalar HbElem::coeff(const HbMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar::zero(p_) : it->second;
}

Scalar HbElem::scalar_part() const { return coeff(empty_monomial(n_)); }

bool HbElem::is_scalar() const {
    if (t_.empty()) return true;
    return t_.size() == 1 && t_.begin()->first == empty_monomial(n_);
}

void HbElem::match(const HbElem& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw std::domain_error("HbElem: context mismatch");
}

HbElem& HbElem::operator+=(const HbElem& o) {
    match(o);
    for (const auto& [m, c] : o.t_) pbw::add_into(t_, m, c);
    return *this;
}

HbElem& HbElem::operator-=(const HbElem& o) {
    match(o);
    for (const auto& [m, c] : o.t_) pbw::add_into(t_, m, -c);
    return *this;
}

HbElem HbElem::scaled(const Scalar& c) const {
    HbElem r(n_, p_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
}

std::uint32_t HbElem::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, _] : t_) d = std::max(d, m.degree());
    return d;
}

HbContext::HbContext(int n, int m, std::vector<Scalar> b, unsigned long p)
    : n_(n), m_(m), p_(p), b_(std::move(b)) {
    if (n_ < 1) throw std::invalid_argument("HbContext: n must be >= 1");
    if (m_ < 1) throw std::invalid_argument("HbContext: m must be >= 1 (degenerate parameter rejected)");
    if (b_.size() != static_cast<std::size_t>(m_) + 1)
        throw std::invalid_argument("HbContext: parameter list must have m+1 entries");
    for (const auto& c : b_)
        if (c.characteristic() != p_) throw std::invalid_argument("HbContext: parameter characteristic mismatch");
    if (!b_.back().is_one()) throw std::invalid_argument("HbContext: parameter must be monic (b_m = 1)");
    if (p_ != 0) {
        if (!Scalar::is_prime(p_)) throw std::invalid_argument("HbContext: characteristic must be prime");
        // every factorial inverted while building brackets and Casimirs has
        // argument <= max(n, m)
        if (p_ <= static_cast<unsigned long>(std::max(n_, m_)))
            throw std::invalid_argument("HbContext: characteristic too small for n, m");
    }

    RTable rt(n_, m_ + 1, p_);
    yx_.assign(n_, std::vector<UgElem>(n_, UgElem(n_, p_)));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) {
            UgElem acc(n_, p_);
            for (int k = 0; k <= m_; ++k) {
                if (b_[k].is_zero()) continue;
                acc += symmetrize(dualize(rt.r(k, j, i)), n_, p_).scaled(b_[k]);
            }
            yx_[i - 1][j - 1] = std::move(acc);
        }
    yx_data_.assign(n_, std::vector<pbw::UgData>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) yx_data_[i][j] = yx_[i][j].terms();

    cfg_left_ = pbw::triangular_config(n_, p_);
    cfg_left_.yx = &yx_data_;
    cfg_left_.strategy = pbw::Strategy::Leftmost;
    cfg_right_ = cfg_left_;
    cfg_right_.strategy = pbw::Strategy::Rightmost;
}

bool HbContext::conservative_prime_bound() const {
    return p_ == 0 || p_ > 2 * static_cast<unsigned long>(n_ + m_ + 3);
}

const UgElem& HbContext::bracket(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("HbContext: bracket index out of range");
    return yx_[i - 1][j - 1];
}

HbElem HbContext::scalar(const Scalar& c) const {
    HbElem r(n_, p_);
    r.add_term(empty_monomial(n_), c);
    return r;
}

HbElem HbContext::x(int i) const { return from_gen(pbw::Gen::x(i)); }
HbElem HbContext::y(int i) const { return from_gen(pbw::Gen::y(i)); }
HbElem HbContext::e(int i, int j) const { return from_gen(pbw::Gen::g(i, j)); }

HbElem HbContext::from_gen(const pbw::Gen& g) const {
    if (g.i < 1 || g.i > n_ || (g.kind == pbw::GenKind::G && (g.j < 1 || g.j > n_)))
        throw std::out_of_range("HbContext: generator index out of range");
    HbMonomial m = empty_monomial(n_);
    switch (g.kind) {
        case pbw::GenKind::X: m.x[g.i - 1] = 1; break;
        case pbw::GenKind::G: m.g[g_rank(g.i, g.j)] = 1; break;
        case pbw::GenKind::Y: m.y[g.i - 1] = 1; break;
    }
    return monomial(m, Scalar::one(p_));
}

HbElem HbContext::monomial(const HbMonomial& m, const Scalar& c) const {
    HbElem r(n_, p_);
    r.add_term(m, c);
    return r;
}

HbElem HbContext::from_ug(const UgElem& u) const {
    if (u.n() != n_ || u.characteristic() != p_) throw std::domain_error("HbContext: U(g) element context mismatch");
    pbw::Elem acc;
    for (const auto& [gexp, c] : u.terms()) {
        pbw::Word w;
        for (int rm = 0; rm < n_ * n_; ++rm)
            for (std::uint32_t rep = 0; rep < gexp[rm]; ++rep) w.push_back(pbw::Gen::g(rm / n_ + 1, rm % n_ + 1));
        pbw::normal_form_into(cfg_left_, w, c, acc);
    }
    HbElem r(n_, p_);
    for (const auto& [m, c] : acc) r.add_term(m, c);
    return r;
}

std::vector<pbw::Gen> HbContext::generator_list() const {
    std::vector<pbw::Gen> gens;
    for (int i = 1; i <= n_; ++i) gens.push_back(pbw::Gen::x(i));
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j) gens.push_back(pbw::Gen::g(i, j));
    for (int i = 1; i <= n_; ++i) gens.push_back(pbw::Gen::y(i));
    return gens;
}

HbElem HbContext::normal_form_word(const pbw::Word& w, const Scalar& coeff, pbw::Strategy s) const {
    for (const auto& g : w)
        if (g.i < 1 || g.i > n_ || (g.kind == pbw::GenKind::G && (g.j < 1 || g.j > n_)))
            throw std::out_of_range("HbContext: word letter out of range");
    pbw::Elem acc = pbw::normal_form(config(s), w, coeff);
    HbElem r(n_, p_);
    for (const auto& [m, c] : acc) r.add_term(m, c);
    return r;
}

HbElem HbContext::mul_serial(const HbElem& a, const HbElem& b) const {
    if (a.n() != n_ || b.n() != n_ || a.characteristic() != p_ || b.characteristic() != p_)
        throw std::domain_error("HbContext: element context mismatch");
    pbw::Elem acc;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            pbw::Word w = pbw::word_of(cfg_left_, ma);
            pbw::Word wb = pbw::word_of(cfg_left_, mb);
            w.insert(w.end(), wb.begin(), wb.end());
            pbw::normal_form_into(cfg_left_, w, ca * cb, acc);
        }
    HbElem r(n_, p_);
    for (const auto& [m, c] : acc) r.add_term(m, c);
    return r;
}

HbElem HbContext::mul(const HbElem& a, const HbElem& b) const {
#ifdef _OPENMP
    const std::size_t pairs = a.term_count() * b.term_count();
    if (pairs >= 64) {
        if (a.n() != n_ || b.n() != n_ || a.characteristic() != p_ || b.characteristic() != p_)
            throw std::domain_error("HbContext: element context mismatch");
        std::vector<std::pair<const std::pair<const HbMonomial, Scalar>*, const std::pair<const HbMonomial, Scalar>*>>
            work;
        work.reserve(pairs);
        for (const auto& ta : a.terms())
            for (const auto& tb : b.terms()) work.push_back({&ta, &tb});
        pbw::Elem acc;
        #pragma omp parallel
        {
            pbw::Elem local;
            #pragma omp for schedule(dynamic, 8) nowait
            for (long idx = 0; idx < static_cast<long>(work.size()); ++idx) {
                const auto& [ta, tb] = work[static_cast<std::size_t>(idx)];
                pbw::Word w = pbw::word_of(cfg_left_, ta->first);
                pbw::Word wb = pbw::word_of(cfg_left_, tb->first);
                w.insert(w.end(), wb.begin(), wb.end());
                pbw::normal_form_into(cfg_left_, w, ta->second * tb->second, local);
            }
            #pragma omp critical(ich_hb_mul_merge)
            {
                for (const auto& [m, c] : local) pbw::add_into(acc, m, c);
            }
        }
        HbElem r(n_, p_);
        for (const auto& [m, c] : acc) r.add_term(m, c);
        return r;
    }
#endif
    return mul_serial(a, b);
}

HbElem HbContext::commutator(const HbElem& a, const HbElem& b) const { return mul(a, b) - mul(b, a); }

HbElem HbContext::pow(const HbElem& a, std::uint32_t k) const {
    HbElem acc = one(), base = a;
    while (k != 0) {
        if (k & 1) acc = mul(acc, base);
        k >>= 1;
        if (k != 0) base = mul(base, base);
    }
    return acc;
}

bool HbContext::is_central(const HbElem& a) const {
    auto gens = generator_list();
    bool central = true;
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic, 1) shared(central)
    for (long idx = 0; idx < static_cast<long>(gens.size()); ++idx) {
        bool snapshot;
        #pragma omp atomic read
        snapshot = central;
        if (!snapshot) continue;
        if (!commutator(a, from_gen(gens[static_cast<std::size_t>(idx)])).is_zero()) {
            #pragma omp atomic write
            central = false;
        }
    }
#else
    for (const auto& g : gens)
        if (!commutator(a, from_gen(g)).is_zero()) {
            central = false;
            break;
        }
#endif
    return central;
}

long HbContext::generator_weight(const pbw::Gen& g, Filtration f) const {
    switch (f) {
        case Filtration::Standard: return g.kind == pbw::GenKind::G ? 0 : 1;
        case Filtration::Weighted:
            if (g.kind == pbw::GenKind::X) return m_;
            return 1;
        case Filtration::GOnly: return g.kind == pbw::GenKind::G ? 1 : 0;
    }
    return 0;
}

long HbContext::monomial_weight(const HbMonomial& m, Filtration f) const {
    long wx = generator_weight(pbw::Gen::x(1), f);
    long wg = generator_weight(pbw::Gen::g(1, 1), f);
    long wy = generator_weight(pbw::Gen::y(1), f);
    long d = 0;
    for (auto k : m.x) d += wx * static_cast<long>(k);
    for (auto k : m.g) d += wg * static_cast<long>(k);
    for (auto k : m.y) d += wy * static_cast<long>(k);
    return d;
}

long HbContext::filtration_degree(const HbElem& a, Filtration f) const {
    if (a.is_zero()) throw std::domain_error("filtration_degree: zero element");
    long d = 0;
    bool first = true;
    for (const auto& [m, _] : a.terms()) {
        long w = monomial_weight(m, f);
        if (first || w > d) d = w;
        first = false;
    }
    return d;
}

Poly HbContext::symbol(const HbElem& a, Filtration f) const {
    long top = filtration_degree(a, f);
    Poly r;
    for (const auto& [m, c] : a.terms()) {
        if (monomial_weight(m, f) != top) continue;
        Monomial mono;
        for (int i = 0; i < n_; ++i)
            if (m.x[i] > 0) mono = mono * Monomial::var(VarId::x(i + 1), m.x[i]);
        for (std::size_t rank = 0; rank < m.g.size(); ++rank)
            if (m.g[rank] > 0) {
                auto [gi, gj] = g_pair(static_cast<int>(rank));
                mono = mono * Monomial::var(VarId::e(gi, gj), m.g[rank]);
            }
        for (int i = 0; i < n_; ++i)
            if (m.y[i] > 0) mono = mono * Monomial::var(VarId::y(i + 1), m.y[i]);
        r.add_term(mono, c);
    }
    return r;
}

HbElem HbContext::exp_ad(const HbElem& v, const HbElem& a) const {
    bool pure_x = true, pure_y = true;
    for (const auto& [m, _] : v.terms()) {
        std::uint32_t dx = 0, dg = 0, dy = 0;
        for (auto k : m.x) dx += k;
        for (auto k : m.g) dg += k;
        for (auto k : m.y) dy += k;
        if (!(dx == 1 && dg == 0 && dy == 0)) pure_x = false;
        if (!(dy == 1 && dg == 0 && dx == 0)) pure_y = false;
    }
    if (!pure_x && !pure_y)
        throw std::invalid_argument("exp_ad: v must be purely x-linear or purely y-linear");

    HbElem res = a, term = a;
    for (std::uint32_t k = 1;; ++k) {
        HbElem ad = commutator(v, term);
        if (ad.is_zero()) break;
        if (p_ != 0 && k >= p_)
            throw std::domain_error("exp_ad: nilpotency order reaches the characteristic");
        if (k > 500) throw std::runtime_error("exp_ad: iteration bound exceeded");
        term = ad.scaled(Scalar::integer(static_cast<long>(k), p_).inv());
        res += term;
    }
    return res;
}

const CasimirResult& HbContext::casimir(int i) const {
    if (i < 1 || i > n_) throw std::out_of_range("casimir: index out of range");
    std::lock_guard<std::mutex> lock(cas_mu_);
    auto it = cas_.find(i);
    if (it == cas_.end()) it = cas_.emplace(i, compute_casimir(i)).first;
    return it->second;
}

HbContext::PbwCheckDetail HbContext::pbw_dimension_detail(int d, std::uint64_t seed, int nwords) const {
    PbwCheckDetail detail;
    // (a) count monomials of total degree <= d against C(n^2+2n+d, d)
    const std::size_t vars = static_cast<std::size_t>(n_) * n_ + 2 * n_;
    std::uint64_t count = 0;
    // enumerate exponent vectors by remaining budget
    std::vector<std::uint32_t> exps(vars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int budget) -> void {
        if (pos == vars) {
            ++count;
            return;
        }
        for (int k = 0; k <= budget; ++k) {
            exps[pos] = static_cast<std::uint32_t>(k);
            self(self, pos + 1, budget - k);
        }
        exps[pos] = 0;
    };
    rec(rec, 0, d);
    mpz_class bin;
    mpz_bin_uiui(bin.get_mpz_t(), vars + static_cast<unsigned long>(d), static_cast<unsigned long>(d));
    detail.monomials = count;
    detail.expected = bin.get_ui();
    detail.counts_ok = (mpz_class(static_cast<unsigned long>(count)) == bin);

    // (b) confluence probe: random words, both strategies agree
    Rng rng(seed);
    auto gens = generator_list();
    detail.confluence_ok = true;
    detail.words_checked = nwords;
    for (int w = 0; w < nwords; ++w) {
        std::size_t len = static_cast<std::size_t>(rng.uniform(0, d));
        pbw::Word word;
        for (std::size_t l = 0; l < len; ++l)
            word.push_back(gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size()) - 1))]);
        HbElem left = normal_form_word(word, Scalar::one(p_), pbw::Strategy::Leftmost);
        HbElem right = normal_form_word(word, Scalar::one(p_), pbw::Strategy::Rightmost);
        if (left != right) {
            detail.confluence_ok = false;
            break;
        }
    }
    return detail;
}

bool HbContext::pbw_dimension_check(int d, std::uint64_t seed, int nwords) const {
    auto detail = pbw_dimension_detail(d, seed, nwords);
    return detail.counts_ok && detail.confluence_ok;
}

}  // namespace ich
