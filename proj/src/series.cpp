#include "ich/series.hpp"

#include <stdexcept>

namespace ich {

namespace {
const Poly kZeroPoly{};
}

TruncSeries::TruncSeries(std::uint32_t t_order, std::uint32_t tau_order) : tord_(t_order), uord_(tau_order) {
    if (t_order < 1 || tau_order < 1) throw std::invalid_argument("TruncSeries: order bounds must be >= 1");
}

TruncSeries TruncSeries::constant(const Poly& c, std::uint32_t t_order, std::uint32_t tau_order) {
    TruncSeries s(t_order, tau_order);
    s.set(0, 0, c);
    return s;
}

TruncSeries TruncSeries::from_poly(const Poly& p, std::uint32_t t_order, std::uint32_t tau_order) {
    TruncSeries s(t_order, tau_order);
    for (const auto& [m, c] : p.terms()) {
        std::uint32_t kt = m.exponent(VarId::t()), ku = m.exponent(VarId::tau());
        if (kt >= t_order || ku >= tau_order) continue;
        Monomial rest;
        for (const auto& [v, k] : m.entries())
            if (v.kind != VarKind::T && v.kind != VarKind::Tau) rest = rest * Monomial::var(v, k);
        auto key = std::make_pair(kt, ku);
        auto it = s.c_.find(key);
        if (it == s.c_.end()) it = s.c_.emplace(key, Poly()).first;
        it->second.add_term(rest, c);
        if (it->second.is_zero()) s.c_.erase(it);
    }
    return s;
}

void TruncSeries::set(std::uint32_t kt, std::uint32_t ktau, Poly c) {
    if (kt >= tord_ || ktau >= uord_) throw std::out_of_range("TruncSeries: power beyond order bound");
    if (c.is_zero())
        c_.erase({kt, ktau});
    else
        c_[{kt, ktau}] = std::move(c);
}

const Poly& TruncSeries::at(std::uint32_t kt, std::uint32_t ktau) const {
    auto it = c_.find({kt, ktau});
    return it == c_.end() ? kZeroPoly : it->second;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    tord_ = std::min(tord_, o.tord_);
    uord_ = std::min(uord_, o.uord_);
    for (const auto& [k, p] : o.c_) {
        if (k.first >= tord_ || k.second >= uord_) continue;
        auto it = c_.find(k);
        if (it == c_.end())
            c_.emplace(k, p);
        else {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    std::erase_if(c_, [&](const auto& kv) { return kv.first.first >= tord_ || kv.first.second >= uord_; });
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    return *this += o.scaled(Scalar::integer(-1, o.scalar_char()));
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(std::min(tord_, o.tord_), std::min(uord_, o.uord_));
    for (const auto& [ka, pa] : c_)
        for (const auto& [kb, pb] : o.c_) {
            std::uint32_t kt = ka.first + kb.first, ku = ka.second + kb.second;
            if (kt >= r.tord_ || ku >= r.uord_) continue;
            Poly prod = pa * pb;
            if (prod.is_zero()) continue;
            auto it = r.c_.find({kt, ku});
            if (it == r.c_.end())
                r.c_.emplace(std::make_pair(kt, ku), std::move(prod));
            else {
                it->second += prod;
                if (it->second.is_zero()) r.c_.erase(it);
            }
        }
    return r;
}

TruncSeries TruncSeries::scaled(const Scalar& c) const {
    TruncSeries r(tord_, uord_);
    if (c.is_zero()) return r;
    for (const auto& [k, p] : c_) r.c_.emplace(k, p.scaled(c));
    return r;
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return tord_ == o.tord_ && uord_ == o.uord_ && c_ == o.c_;
}

bool TruncSeries::is_one() const {
    if (c_.size() != 1) return false;
    const auto& [k, p] = *c_.begin();
    return k.first == 0 && k.second == 0 && p.term_count() == 1 && p.terms().begin()->first.empty() &&
           p.terms().begin()->second.is_one();
}

TruncSeries TruncSeries::inverse() const {
    const Poly& c0 = at(0, 0);
    if (c0.is_zero() || c0.term_count() != 1 || !c0.terms().begin()->first.empty())
        throw std::domain_error("TruncSeries: constant term is not a unit scalar");
    Scalar u = c0.terms().begin()->second.inv();

    // graded recursion: g_k = -u * sum_{0 < j <= k} f_j g_{k-j}, g_0 = u
    TruncSeries g(tord_, uord_);
    g.set(0, 0, Poly::constant(u));
    for (std::uint32_t total = 1; total < tord_ + uord_ - 1; ++total) {
        for (std::uint32_t kt = 0; kt < tord_; ++kt) {
            if (total < kt) continue;
            std::uint32_t ku = total - kt;
            if (ku >= uord_) continue;
            Poly acc;
            for (const auto& [kf, pf] : c_) {
                if (kf.first == 0 && kf.second == 0) continue;
                if (kf.first > kt || kf.second > ku) continue;
                const Poly& gc = g.at(kt - kf.first, ku - kf.second);
                if (gc.is_zero()) continue;
                acc += pf * gc;
            }
            if (!acc.is_zero()) g.set(kt, ku, acc.scaled(-u));
        }
    }
    return g;
}

std::string TruncSeries::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [k, p] : c_) {
        if (!s.empty()) s += " + ";
        s += "(" + p.str() + ")";
        if (k.first > 0) s += "*t^" + std::to_string(k.first);
        if (k.second > 0) s += "*tau^" + std::to_string(k.second);
    }
    return s;
}

unsigned long TruncSeries::scalar_char() const {
    if (c_.empty()) return 0;
    return c_.begin()->second.terms().begin()->second.characteristic();
}

std::vector<std::vector<TruncSeries>> matrix_resolvent(int n, std::uint32_t order, unsigned long characteristic) {
    if (order < 1) throw std::invalid_argument("matrix_resolvent: order must be >= 1");
    // power[i][j] = (A^k)_{ij} as Poly, iterated k = 0..order-1
    std::vector<std::vector<Poly>> power(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i) power[i][i] = Poly::constant(Scalar::one(characteristic));
    std::vector<std::vector<TruncSeries>> res(n, std::vector<TruncSeries>(n, TruncSeries(order)));
    for (std::uint32_t k = 0; k < order; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!power[i][j].is_zero()) res[i][j].set(k, 0, power[i][j]);
        if (k + 1 == order) break;
        std::vector<std::vector<Poly>> next(n, std::vector<Poly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Poly acc;
                for (int l = 0; l < n; ++l)
                    acc += power[i][l] * Poly::var(VarId::a(l + 1, j + 1), 1, characteristic);
                next[i][j] = std::move(acc);
            }
        power = std::move(next);
    }
    return res;
}

TruncSeries det_one_minus_tA(int n, std::uint32_t order, unsigned long characteristic) {
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    Poly t = Poly::var(VarId::t(), 1, characteristic);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly entry = -(t * Poly::var(VarId::a(i + 1, j + 1), 1, characteristic));
            if (i == j) entry += Poly::constant(Scalar::one(characteristic));
            m[i][j] = std::move(entry);
        }
    return TruncSeries::from_poly(poly_det(m), order);
}

}  // namespace ich
