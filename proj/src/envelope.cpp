#include "ich/envelope.hpp"

#include <algorithm>
#include <stdexcept>

#include "ich/invariants.hpp"

namespace ich {

namespace {

pbw::GExp zero_exp(int n) { return pbw::GExp(static_cast<std::size_t>(n) * n, 0); }

Scalar ratio(unsigned long p, unsigned long num, unsigned long den) {
    if (p == 0) return Scalar::rational(mpq_class(num, den));
    return Scalar::residue(num % p, p) / Scalar::residue(den % p, p);
}

unsigned long factorial(std::uint32_t k) {
    unsigned long f = 1;
    for (std::uint32_t i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

UgElem UgElem::scalar(int n, unsigned long p, const Scalar& c) {
    UgElem u(n, p);
    u.add_term(zero_exp(n), c);
    return u;
}

UgElem UgElem::generator(int n, unsigned long p, int i, int j) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("UgElem: generator index out of range");
    pbw::GExp e = zero_exp(n);
    e[(i - 1) * n + (j - 1)] = 1;
    return monomial(n, p, std::move(e), Scalar::one(p));
}

UgElem UgElem::monomial(int n, unsigned long p, pbw::GExp exps, const Scalar& c) {
    if (exps.size() != static_cast<std::size_t>(n) * n) throw std::invalid_argument("UgElem: bad exponent vector");
    UgElem u(n, p);
    u.add_term(exps, c);
    return u;
}

void UgElem::add_term(const pbw::GExp& e, const Scalar& c) {
    if (c.is_zero()) return;
    if (c.characteristic() != p_) throw std::domain_error("UgElem: characteristic mismatch");
    auto [it, fresh] = t_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Scalar UgElem::coeff(const pbw::GExp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar::zero(p_) : it->second;
}

Scalar UgElem::constant_term() const { return coeff(zero_exp(n_)); }

void UgElem::match(const UgElem& o) const {
    if (n_ != o.n_ || p_ != o.p_) throw std::domain_error("UgElem: context mismatch");
}

UgElem& UgElem::operator+=(const UgElem& o) {
    match(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

UgElem& UgElem::operator-=(const UgElem& o) {
    match(o);
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

UgElem UgElem::scaled(const Scalar& c) const {
    UgElem r(n_, p_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : t_) r.t_.emplace(e, k * c);
    return r;
}

std::uint32_t UgElem::degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, _] : t_) {
        std::uint32_t s = 0;
        for (auto k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

Poly UgElem::commutative_image() const {
    Poly r;
    for (const auto& [e, c] : t_) {
        Monomial m;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                std::uint32_t k = e[(i - 1) * n_ + (j - 1)];
                if (k > 0) m = m * Monomial::var(VarId::e(i, j), k);
            }
        r.add_term(m, c);
    }
    return r;
}

Poly UgElem::top_symbol() const {
    return commutative_image().top_part([](VarId) { return 1; });
}

std::string UgElem::str() const { return commutative_image().str(); }

UgElem ug_mul(const UgElem& a, const UgElem& b) {
    if (a.n() != b.n() || a.characteristic() != b.characteristic())
        throw std::domain_error("ug_mul: context mismatch");
    pbw::Config cfg = pbw::rowmajor_config(a.n(), a.characteristic());
    pbw::Elem acc;
    std::vector<std::uint32_t> noxy(a.n(), 0);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            pbw::Word w = pbw::word_of(cfg, pbw::TriExp{noxy, ea, noxy});
            pbw::Word wb = pbw::word_of(cfg, pbw::TriExp{noxy, eb, noxy});
            w.insert(w.end(), wb.begin(), wb.end());
            pbw::normal_form_into(cfg, w, ca * cb, acc);
        }
    UgElem r(a.n(), a.characteristic());
    for (const auto& [m, c] : acc) r.add_term(m.g, c);
    return r;
}

UgElem ug_commutator(const UgElem& a, const UgElem& b) { return ug_mul(a, b) - ug_mul(b, a); }

UgElem ug_pow(const UgElem& a, std::uint32_t k) {
    UgElem acc = UgElem::scalar(a.n(), a.characteristic(), Scalar::one(a.characteristic()));
    for (std::uint32_t i = 0; i < k; ++i) acc = ug_mul(acc, a);
    return acc;
}

UgElem symmetrize(const Poly& s, int n, unsigned long p) {
    pbw::Config cfg = pbw::rowmajor_config(n, p);
    UgElem out(n, p);
    pbw::Elem acc;
    for (const auto& [m, c] : s.terms()) {
        std::uint32_t d = m.degree();
        if (p != 0 && d >= p)
            throw std::domain_error("symmetrize: monomial degree " + std::to_string(d) +
                                    " not below characteristic " + std::to_string(p));
        pbw::Word w;
        unsigned long mult_fact = 1;
        for (const auto& [v, k] : m.entries()) {
            if (v.kind != VarKind::E || v.i < 1 || v.i > n || v.j < 1 || v.j > n)
                throw std::domain_error("symmetrize: expected e-variables within gl_" + std::to_string(n) +
                                        ", found " + v.str());
            for (std::uint32_t rep = 0; rep < k; ++rep) w.push_back(pbw::Gen::g(v.i, v.j));
            mult_fact *= factorial(k);
        }
        std::sort(w.begin(), w.end());
        // each distinct sequence of the multiset stands for mult_fact of the d! orderings
        Scalar weight = c * ratio(p, mult_fact, factorial(d));
        do {
            pbw::normal_form_into(cfg, w, weight, acc);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    for (const auto& [m, c] : acc) out.add_term(m.g, c);
    return out;
}

UgElem ug_alpha(int n, int i, unsigned long p) {
    if (i < 1 || i > n) throw std::out_of_range("ug_alpha: index out of range");
    return symmetrize(dualize(q_invariant(n, i, p)), n, p);
}

bool ug_is_central(const UgElem& u) {
    for (int i = 1; i <= u.n(); ++i)
        for (int j = 1; j <= u.n(); ++j) {
            UgElem g = UgElem::generator(u.n(), u.characteristic(), i, j);
            if (!ug_commutator(u, g).is_zero()) return false;
        }
    return true;
}

}  // namespace ich
