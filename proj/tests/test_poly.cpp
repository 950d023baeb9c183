#include "doctest.h"
#include "ich/poly.hpp"
#include "ich/rng.hpp"

using namespace ich;

namespace {
Poly A(int u, int v, unsigned long p = 0) { return Poly::var(VarId::a(u, v), 1, p); }
Poly C(long k) { return Poly::constant(Scalar::integer(k)); }
}  // namespace

TEST_CASE("product and sum examples") {
    // (a11 + 1) * (a11 - 1) = a11^2 - 1
    Poly lhs = (A(1, 1) + C(1)) * (A(1, 1) - C(1));
    Poly rhs = Poly::var(VarId::a(1, 1), 2) - C(1);
    CHECK(lhs == rhs);

    // p + 0 = p
    Poly p = A(1, 2) * A(2, 1) + C(5);
    CHECK(p + Poly::zero() == p);

    // over F_5: (2 a11)(3 a11) = a11^2
    Poly two_a = A(1, 1, 5).scaled(Scalar::residue(2, 5));
    Poly three_a = A(1, 1, 5).scaled(Scalar::residue(3, 5));
    CHECK(two_a * three_a == Poly::var(VarId::a(1, 1), 2, 5));
}

TEST_CASE("characteristic mismatch propagates") {
    CHECK_THROWS_AS(A(1, 1) + A(1, 1, 5), std::domain_error);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(42);
    auto random_poly = [&](unsigned long chr) {
        Poly p;
        for (int t = 0; t < 4; ++t) {
            Monomial m;
            for (int v = 0; v < 2; ++v)
                m = m * Monomial::var(VarId::a(static_cast<int>(rng.uniform(1, 2)),
                                               static_cast<int>(rng.uniform(1, 2))),
                                      static_cast<std::uint32_t>(rng.uniform(0, 2)));
            p.add_term(m, rng.scalar(chr));
        }
        return p;
    };
    for (unsigned long chr : {0ul, 5ul}) {
        for (int i = 0; i < 20; ++i) {
            Poly a = random_poly(chr), b = random_poly(chr), c = random_poly(chr);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a - a == Poly::zero());
        }
    }
}

TEST_CASE("determinant examples") {
    CHECK(poly_det({{A(1, 1)}}) == A(1, 1));
    Poly det2 = poly_det({{A(1, 1), A(1, 2)}, {A(2, 1), A(2, 2)}});
    CHECK(det2 == A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1));

    // det(tI - A) for n = 2
    Poly t = Poly::var(VarId::t());
    Poly det = poly_det({{t - A(1, 1), -A(1, 2)}, {-A(2, 1), t - A(2, 2)}});
    Poly expect = t * t - t * (A(1, 1) + A(2, 2)) + (A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1));
    CHECK(det == expect);

    CHECK_THROWS_AS(poly_det(std::vector<std::vector<Poly>>(5, std::vector<Poly>(5))), std::domain_error);
}

TEST_CASE("triangular determinant equals diagonal product") {
    Rng rng(7);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform(1, 4));
        std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
        Poly diag = C(1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j <= i; ++j)
                m[i][j] = Poly::term(Monomial::var(VarId::a(static_cast<int>(i + 1), static_cast<int>(j + 1))),
                                     rng.rational());
            if (m[i][i].is_zero()) m[i][i] = C(1);
            diag = diag * m[i][i];
        }
        CHECK(poly_det(m) == diag);
    }
}

TEST_CASE("monomial order is a total dense-lex order") {
    Monomial a2 = Monomial::var(VarId::a(1, 1), 2);
    Monomial ab = Monomial::var(VarId::a(1, 1)) * Monomial::var(VarId::a(1, 2));
    Monomial b2 = Monomial::var(VarId::a(1, 2), 2);
    CHECK(ab < a2);
    CHECK(b2 < ab);
    CHECK(!(a2 < a2));
    CHECK(Monomial() < b2);
}

TEST_CASE("eval and substitute") {
    Poly p = A(1, 1) * A(2, 2) - A(1, 2) * A(2, 1);
    std::map<VarId, Scalar> pt{{VarId::a(1, 1), Scalar::integer(2)},
                               {VarId::a(1, 2), Scalar::integer(3)},
                               {VarId::a(2, 1), Scalar::integer(4)},
                               {VarId::a(2, 2), Scalar::integer(5)}};
    CHECK(p.eval(pt, 0) == Scalar::integer(-2));
    Poly partial = p.substitute({{VarId::a(1, 2), Scalar::integer(0)}});
    CHECK(partial == A(1, 1) * A(2, 2));
    CHECK_THROWS_AS(p.eval({}, 0), std::domain_error);
}

TEST_CASE("derivative") {
    Poly p = Poly::var(VarId::a(1, 1), 3) * A(1, 2);
    CHECK(p.derivative(VarId::a(1, 1)) == Poly::var(VarId::a(1, 1), 2).scaled(Scalar::integer(3)) * A(1, 2));
    CHECK(p.derivative(VarId::a(2, 2)) == Poly::zero());
}
