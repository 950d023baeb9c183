#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ich {

/// Exact scalar: a rational number (characteristic 0, GMP-backed) or a
/// residue in a prime field F_p. Fractions are kept canonical by mpq;
/// residues satisfy 0 <= value < p. Mixing characteristics throws.
class Scalar {
public:
    Scalar() : p_(0), q_(0), r_(0) {}

    static Scalar rational(mpq_class q) {
        Scalar s;
        q.canonicalize();
        s.q_ = std::move(q);
        return s;
    }
    static Scalar integer(long v, unsigned long characteristic = 0) {
        if (characteristic == 0) return rational(mpq_class(v));
        return residue_of(v, characteristic);
    }
    static Scalar fraction(long num, long den, unsigned long characteristic = 0) {
        if (den == 0) throw std::domain_error("Scalar: zero denominator");
        if (characteristic == 0) return rational(mpq_class(num, den));
        return residue_of(num, characteristic) / residue_of(den, characteristic);
    }
    static Scalar residue(unsigned long v, unsigned long p) {
        check_prime(p);
        Scalar s;
        s.p_ = p;
        s.r_ = v % p;
        return s;
    }
    static Scalar residue_of(long v, unsigned long p) {
        check_prime(p);
        long m = v % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        return residue(static_cast<unsigned long>(m), p);
    }
    static Scalar zero(unsigned long characteristic) {
        return characteristic == 0 ? Scalar() : residue(0, characteristic);
    }
    static Scalar one(unsigned long characteristic) {
        return characteristic == 0 ? rational(mpq_class(1)) : residue(1, characteristic);
    }

    /// Accepts "a", "-a", "a/b" and "k mod p".
    static Scalar parse(const std::string& text);

    unsigned long characteristic() const { return p_; }
    bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
    bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

    const mpq_class& rat() const {
        if (p_ != 0) throw std::domain_error("Scalar: not a rational");
        return q_;
    }
    unsigned long res() const {
        if (p_ == 0) throw std::domain_error("Scalar: not a residue");
        return r_;
    }

    Scalar operator-() const {
        Scalar s(*this);
        if (p_ == 0)
            s.q_ = -s.q_;
        else if (s.r_ != 0)
            s.r_ = p_ - s.r_;
        return s;
    }

    Scalar& operator+=(const Scalar& o) {
        match(o);
        if (p_ == 0)
            q_ += o.q_;
        else
            r_ = addmod(r_, o.r_, p_);
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        match(o);
        if (p_ == 0)
            q_ -= o.q_;
        else
            r_ = addmod(r_, o.r_ == 0 ? 0 : p_ - o.r_, p_);
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        match(o);
        if (p_ == 0)
            q_ *= o.q_;
        else
            r_ = mulmod(r_, o.r_, p_);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inv() const;
    Scalar pow(unsigned long e) const;

    bool operator==(const Scalar& o) const {
        if (p_ != o.p_) return false;
        return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
    }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "a", "a/b" or "k mod p".
    std::string str() const;

    /// Rational -> F_p image; throws if the denominator vanishes mod p.
    Scalar reduce_mod(unsigned long p) const;

    /// Small integer view (requires an integer rational or a residue).
    long to_long() const;

    static bool is_prime(unsigned long p);

private:
    static void check_prime(unsigned long p) {
        if (!is_prime(p)) throw std::domain_error("Scalar: modulus " + std::to_string(p) + " is not prime");
    }
    void match(const Scalar& o) const {
        if (p_ != o.p_)
            throw std::domain_error("Scalar: characteristic mismatch (" + std::to_string(p_) + " vs " +
                                    std::to_string(o.p_) + ")");
    }
    static unsigned long addmod(unsigned long a, unsigned long b, unsigned long p) { return (a + b) % p; }
    static unsigned long mulmod(unsigned long a, unsigned long b, unsigned long p) {
        return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % p);
    }

    unsigned long p_;  // 0 = characteristic 0
    mpq_class q_;      // used when p_ == 0
    unsigned long r_;  // used when p_ > 0
};

}  // namespace ich
