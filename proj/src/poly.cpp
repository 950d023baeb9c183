#include "ich/poly.hpp"

#include <algorithm>

namespace ich {

std::uint32_t Monomial::degree() const {
    std::uint32_t d = 0;
    for (const auto& [v, k] : e_) d += k;
    return d;
}

std::uint32_t Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(e_.begin(), e_.end(), v,
                               [](const auto& p, const VarId& w) { return p.first < w; });
    if (it != e_.end() && it->first == v) return it->second;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (b == o.e_.end() || (a != e_.end() && a->first < b->first))
            r.e_.push_back(*a++);
        else if (a == e_.end() || b->first < a->first)
            r.e_.push_back(*b++);
        else {
            r.e_.push_back({a->first, a->second + b->second});
            ++a;
            ++b;
        }
    }
    return r;
}

Monomial Monomial::divide_once(VarId v) const {
    Monomial r = *this;
    for (auto& [w, k] : r.e_)
        if (w == v) {
            if (--k == 0)
                r.e_.erase(std::find_if(r.e_.begin(), r.e_.end(), [&](const auto& p) { return p.first == v; }));
            return r;
        }
    throw std::domain_error("Monomial: dividing by absent variable " + v.str());
}

Monomial Monomial::rename(const std::function<VarId(VarId)>& f) const {
    Monomial r;
    for (const auto& [v, k] : e_) {
        Monomial one = var(f(v), k);
        r = r * one;
    }
    return r;
}

bool Monomial::uses_kind(VarKind k) const {
    for (const auto& [v, _] : e_)
        if (v.kind == k) return true;
    return false;
}

bool Monomial::operator<(const Monomial& o) const {
    auto a = e_.begin(), b = o.e_.begin();
    while (a != e_.end() || b != o.e_.end()) {
        if (a != e_.end() && (b == o.e_.end() || a->first < b->first)) return false;
        if (b != o.e_.end() && (a == e_.end() || b->first < a->first)) return true;
        if (a->second != b->second) return a->second < b->second;
        ++a;
        ++b;
    }
    return false;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (const auto& [v, k] : e_) {
        if (!s.empty()) s += "*";
        s += v.str();
        if (k > 1) s += "^" + std::to_string(k);
    }
    return s;
}

Poly Poly::constant(Scalar c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(Monomial(), std::move(c));
    return p;
}

Poly Poly::var(VarId v, std::uint32_t k, unsigned long characteristic) {
    return term(Monomial::var(v, k), Scalar::one(characteristic));
}

Poly Poly::term(Monomial m, Scalar c) {
    Poly p;
    if (!c.is_zero()) p.t_.emplace(std::move(m), std::move(c));
    return p;
}

Scalar Poly::coeff(const Monomial& m, unsigned long characteristic) const {
    auto it = t_.find(m);
    return it == t_.end() ? Scalar::zero(characteristic) : it->second;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : o.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : t_) r.add_term(m, k * c);
    return r;
}

Poly Poly::pow(std::uint32_t k) const {
    if (k == 0) {
        // characteristic of "1" follows the terms if any; a zero poly to the 0th
        // power has no coefficient to copy, default to char 0
        unsigned long p = t_.empty() ? 0 : t_.begin()->second.characteristic();
        return constant(Scalar::one(p));
    }
    Poly acc = *this;
    for (std::uint32_t i = 1; i < k; ++i) acc = acc * *this;
    return acc;
}

std::uint32_t Poly::degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, _] : t_) d = std::max(d, m.degree());
    return d;
}

std::optional<long> Poly::weighted_degree(const std::function<long(VarId)>& w) const {
    std::optional<long> d;
    for (const auto& [m, _] : t_) {
        long dm = 0;
        for (const auto& [v, k] : m.entries()) dm += w(v) * static_cast<long>(k);
        if (!d || dm > *d) d = dm;
    }
    return d;
}

Poly Poly::top_part(const std::function<long(VarId)>& w) const {
    auto d = weighted_degree(w);
    Poly r;
    if (!d) return r;
    for (const auto& [m, c] : t_) {
        long dm = 0;
        for (const auto& [v, k] : m.entries()) dm += w(v) * static_cast<long>(k);
        if (dm == *d) r.t_.emplace(m, c);
    }
    return r;
}

bool Poly::is_homogeneous(const std::function<long(VarId)>& w) const {
    return top_part(w) == *this;
}

Poly Poly::coefficient_of(VarId v, std::uint32_t k) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        if (m.exponent(v) != k) continue;
        Monomial stripped = m;
        for (std::uint32_t i = 0; i < k; ++i) stripped = stripped.divide_once(v);
        r.add_term(stripped, c);
    }
    return r;
}

std::uint32_t Poly::max_power(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& [m, _] : t_) d = std::max(d, m.exponent(v));
    return d;
}

Poly Poly::derivative(VarId v) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        std::uint32_t k = m.exponent(v);
        if (k == 0) continue;
        unsigned long p = c.characteristic();
        r.add_term(m.divide_once(v), c * Scalar::integer(static_cast<long>(k), p));
    }
    return r;
}

Poly Poly::rename(const std::function<VarId(VarId)>& f) const {
    Poly r;
    for (const auto& [m, c] : t_) r.add_term(m.rename(f), c);
    return r;
}

bool Poly::uses_kind(VarKind k) const {
    for (const auto& [m, _] : t_)
        if (m.uses_kind(k)) return true;
    return false;
}

Scalar Poly::eval(const std::map<VarId, Scalar>& point, unsigned long characteristic) const {
    Scalar acc = Scalar::zero(characteristic);
    for (const auto& [m, c] : t_) {
        Scalar v = c;
        for (const auto& [var, k] : m.entries()) {
            auto it = point.find(var);
            if (it == point.end()) throw std::domain_error("Poly: unassigned variable " + var.str());
            v *= it->second.pow(k);
        }
        acc += v;
    }
    return acc;
}

Poly Poly::substitute(const std::map<VarId, Scalar>& point) const {
    Poly r;
    for (const auto& [m, c] : t_) {
        Scalar coeff = c;
        Monomial rest;
        for (const auto& [var, k] : m.entries()) {
            auto it = point.find(var);
            if (it == point.end())
                rest = rest * Monomial::var(var, k);
            else
                coeff *= it->second.pow(k);
        }
        r.add_term(rest, coeff);
    }
    return r;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->first.empty())
            s += it->second.str();
        else if (it->second.is_one())
            s += it->first.str();
        else
            s += it->second.str() + "*" + it->first.str();
    }
    return s;
}

Poly poly_det(const std::vector<std::vector<Poly>>& m, std::size_t size_bound) {
    std::size_t n = m.size();
    if (n > size_bound) throw std::domain_error("poly_det: size bound exceeded");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("poly_det: matrix not square");
    if (n == 0) return Poly::constant(Scalar::rational(1));
    if (n == 1) return m[0][0];
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Poly>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Poly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        Poly cof = m[0][c] * poly_det(minor, size_bound);
        if (c % 2 == 0)
            det += cof;
        else
            det -= cof;
    }
    return det;
}

}  // namespace ich
