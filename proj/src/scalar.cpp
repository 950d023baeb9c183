#include "ich/scalar.hpp"

#include <cctype>

namespace ich {

namespace {

// extended euclid, returns x with a*x = gcd(a,p) mod p
long inv_mod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) throw std::domain_error("Scalar: division by a non-unit residue");
    if (t < 0) t += p;
    return t;
}

bool valid_int(const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    if (p_ == 0) return rational(1 / q_);
    return residue(static_cast<unsigned long>(inv_mod(static_cast<long>(r_), static_cast<long>(p_))), p_);
}

Scalar Scalar::pow(unsigned long e) const {
    Scalar acc = one(p_), base = *this;
    while (e != 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::string Scalar::str() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_) + " mod " + std::to_string(p_);
}

Scalar Scalar::reduce_mod(unsigned long p) const {
    if (p_ != 0) throw std::domain_error("Scalar: reduce_mod expects a rational");
    check_prime(p);
    mpz_class num = q_.get_num(), den = q_.get_den(), pz(static_cast<unsigned long>(p));
    if (mpz_divisible_p(den.get_mpz_t(), pz.get_mpz_t()))
        throw std::domain_error("Scalar: denominator not invertible mod " + std::to_string(p));
    mpz_class nm = num % pz, dm = den % pz;
    long n = nm.get_si(), d = dm.get_si();
    if (n < 0) n += static_cast<long>(p);
    return residue(static_cast<unsigned long>(n), p) *
           residue(static_cast<unsigned long>(inv_mod(d, static_cast<long>(p))), p);
}

long Scalar::to_long() const {
    if (p_ != 0) return static_cast<long>(r_);
    if (q_.get_den() != 1 || !q_.get_num().fits_slong_p())
        throw std::domain_error("Scalar: not a small integer");
    return q_.get_num().get_si();
}

bool Scalar::is_prime(unsigned long p) {
    if (p < 2) return false;
    for (unsigned long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar Scalar::parse(const std::string& text) {
    // strip blanks at both ends
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("Scalar: empty literal");
    std::string s = text.substr(b, e - b + 1);

    size_t mod = s.find(" mod ");
    if (mod != std::string::npos) {
        std::string v = s.substr(0, mod), m = s.substr(mod + 5);
        if (!valid_int(v) || !valid_int(m) || m[0] == '-')
            throw std::invalid_argument("Scalar: malformed residue literal '" + s + "'");
        return residue_of(std::stol(v), std::stoul(m));
    }
    size_t slash = s.find('/');
    if (slash != std::string::npos) {
        std::string n = s.substr(0, slash), d = s.substr(slash + 1);
        if (!valid_int(n) || !valid_int(d) || d[0] == '-' || mpz_class(d) == 0)
            throw std::invalid_argument("Scalar: malformed rational literal '" + s + "'");
        return rational(mpq_class(mpz_class(n), mpz_class(d)));
    }
    if (!valid_int(s)) throw std::invalid_argument("Scalar: malformed integer literal '" + s + "'");
    return rational(mpq_class(mpz_class(s)));
}

}  // namespace ich
