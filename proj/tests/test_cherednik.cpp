#include "doctest.h"
#include "ich/cherednik.hpp"
#include "ich/rng.hpp"

using namespace ich;
using pbw::Gen;

namespace {

std::vector<Scalar> bparam(std::initializer_list<long> coeffs) {
    std::vector<Scalar> b;
    for (long c : coeffs) b.push_back(Scalar::integer(c));
    return b;
}

HbElem random_elem(const HbContext& ctx, Rng& rng, int terms, int maxdeg) {
    HbElem r = ctx.zero();
    auto gens = ctx.generator_list();
    for (int t = 0; t < terms; ++t) {
        pbw::Word w;
        int len = static_cast<int>(rng.uniform(0, maxdeg));
        for (int l = 0; l < len; ++l)
            w.push_back(gens[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(gens.size()) - 1))]);
        r += ctx.normal_form_word(w, rng.scalar(ctx.characteristic()));
    }
    return r;
}

}  // namespace

TEST_CASE("context validation") {
    CHECK_THROWS_AS(HbContext(1, 1, bparam({0, 2})), std::invalid_argument);       // not monic
    CHECK_THROWS_AS(HbContext(1, 0, bparam({1})), std::invalid_argument);          // m = 0
    CHECK_THROWS_AS(HbContext(1, 1, bparam({0, 1, 1})), std::invalid_argument);    // wrong length
    CHECK_THROWS_AS(HbContext(0, 1, bparam({0, 1})), std::invalid_argument);       // n = 0
    CHECK_THROWS_AS(HbContext(2, 1, bparam({0, 1}), 4), std::invalid_argument);    // composite char
    std::vector<Scalar> bq{Scalar::residue(3, 7), Scalar::residue(1, 7)};
    CHECK_NOTHROW(HbContext(2, 1, bq, 7));
}

TEST_CASE("bracket table n=1, m=1") {
    HbContext ctx(1, 1, bparam({3, 1}));
    UgElem expect = UgElem::scalar(1, 0, Scalar::integer(3)) +
                    UgElem::generator(1, 0, 1, 1).scaled(Scalar::integer(2));
    CHECK(ctx.bracket(1, 1) == expect);
}

TEST_CASE("bracket table n=2, m=1") {
    HbContext ctx(2, 1, bparam({5, 1}));
    CHECK(ctx.bracket(1, 2) == UgElem::generator(2, 0, 1, 2));
    UgElem expect = UgElem::scalar(2, 0, Scalar::integer(5)) +
                    UgElem::generator(2, 0, 1, 1).scaled(Scalar::integer(2)) + UgElem::generator(2, 0, 2, 2);
    CHECK(ctx.bracket(1, 1) == expect);
    CHECK(ctx.bracket(2, 1) == UgElem::generator(2, 0, 2, 1));
}

TEST_CASE("bracket table n=1, m=2") {
    HbContext ctx(1, 2, bparam({4, 7, 1}));
    UgElem e = UgElem::generator(1, 0, 1, 1);
    UgElem expect = UgElem::scalar(1, 0, Scalar::integer(4)) + e.scaled(Scalar::integer(14)) +
                    ug_mul(e, e).scaled(Scalar::integer(3));
    CHECK(ctx.bracket(1, 1) == expect);
}

TEST_CASE("normal form of y x and friends") {
    HbContext ctx(1, 1, bparam({3, 1}));
    // y1 x1 -> x1 y1 + b0 + 2 e11
    HbElem yx = ctx.mul(ctx.y(1), ctx.x(1));
    HbElem expect = ctx.mul(ctx.x(1), ctx.y(1)) + ctx.scalar(Scalar::integer(3)) +
                    ctx.e(1, 1).scaled(Scalar::integer(2));
    CHECK(yx == expect);
    // x1 y1 is already normal
    HbElem xy = ctx.normal_form_word({Gen::x(1), Gen::y(1)}, Scalar::integer(1));
    HbMonomial m{{1}, {0}, {1}};
    CHECK(xy == ctx.monomial(m, Scalar::integer(1)));
    // e11 x1 = x1 e11 - x1
    HbElem ex = ctx.mul(ctx.e(1, 1), ctx.x(1));
    CHECK(ex == ctx.mul(ctx.x(1), ctx.e(1, 1)) - ctx.x(1));
}

TEST_CASE("commutator examples") {
    HbContext ctx(2, 1, bparam({0, 1}));
    CHECK(ctx.commutator(ctx.e(1, 1), ctx.y(1)) == ctx.y(1));
    CHECK(ctx.commutator(ctx.y(1), ctx.x(2)) == ctx.from_ug(ctx.bracket(1, 2)));
    // associativity probe from the operation examples
    HbElem xy = ctx.mul(ctx.x(1), ctx.y(1));
    HbElem lhs = ctx.mul(xy, xy);
    HbElem rhs = ctx.mul(ctx.mul(ctx.x(1), ctx.mul(ctx.y(1), ctx.x(1))), ctx.y(1));
    CHECK(lhs == rhs);
}

TEST_CASE("normal form is independent of the rewrite strategy") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}}) {
        std::vector<Scalar> b(m + 1, Scalar::integer(1));
        for (int k = 0; k < m; ++k) b[k] = Scalar::integer(k + 2);
        HbContext ctx(n, m, b);
        CHECK(ctx.pbw_dimension_check(4, 77, 40));
    }
}

TEST_CASE("normal form of a normal word is a fixed point") {
    HbContext ctx(2, 1, bparam({1, 1}));
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        HbElem a = random_elem(ctx, rng, 3, 4);
        for (const auto& [mono, c] : a.terms()) {
            pbw::Word w = pbw::word_of(ctx.config(), mono);
            CHECK(ctx.normal_form_word(w, c) == ctx.monomial(mono, c));
        }
    }
}

TEST_CASE("graded monomial counts") {
    HbContext c1(1, 1, bparam({0, 1}));
    auto d1 = c1.pbw_dimension_detail(3, 1, 4);
    CHECK(d1.monomials == 20);  // C(6,3)
    CHECK(d1.counts_ok);
    HbContext c2(2, 1, bparam({0, 1}));
    auto d2 = c2.pbw_dimension_detail(2, 1, 4);
    CHECK(d2.monomials == 45);  // C(10,2)
    CHECK(d2.counts_ok);
    auto d0 = c2.pbw_dimension_detail(0, 1, 1);
    CHECK(d0.monomials == 1);
}

TEST_CASE("associativity on seeded random triples") {
    Rng rng(101);
    for (auto [n, m] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
        std::vector<Scalar> b(m + 1, Scalar::integer(1));
        HbContext ctx(n, m, b);
        for (int trial = 0; trial < 25; ++trial) {
            HbElem a = random_elem(ctx, rng, 2, 3);
            HbElem bb = random_elem(ctx, rng, 2, 3);
            HbElem c = random_elem(ctx, rng, 2, 3);
            CHECK(ctx.mul(ctx.mul(a, bb), c) == ctx.mul(a, ctx.mul(bb, c)));
        }
    }
}

TEST_CASE("jacobi identity on all generator triples, n <= 2") {
    for (int n : {1, 2}) {
        HbContext ctx(n, 1, bparam({2, 1}));
        auto gens = ctx.generator_list();
        for (const auto& ga : gens)
            for (const auto& gb : gens)
                for (const auto& gc : gens) {
                    HbElem a = ctx.from_gen(ga), b = ctx.from_gen(gb), c = ctx.from_gen(gc);
                    HbElem j = ctx.commutator(a, ctx.commutator(b, c)) +
                               ctx.commutator(b, ctx.commutator(c, a)) +
                               ctx.commutator(c, ctx.commutator(a, b));
                    CHECK(j.is_zero());
                }
    }
}

TEST_CASE("parallel product equals the serial reference") {
    Rng rng(55);
    HbContext ctx(2, 1, bparam({1, 1}));
    for (int trial = 0; trial < 6; ++trial) {
        HbElem a = random_elem(ctx, rng, 12, 4);
        HbElem b = random_elem(ctx, rng, 12, 4);
        CHECK(ctx.mul(a, b) == ctx.mul_serial(a, b));
    }
}

TEST_CASE("filtration degrees and symbols") {
    HbContext ctx(1, 1, bparam({3, 1}));
    CHECK(ctx.filtration_degree(ctx.e(1, 1), Filtration::Standard) == 0);
    CHECK(ctx.filtration_degree(ctx.x(1), Filtration::Weighted) == 1);
    HbContext ctx2(1, 2, bparam({0, 0, 1}));
    CHECK(ctx2.filtration_degree(ctx2.x(1), Filtration::Weighted) == 2);
    CHECK(ctx2.filtration_degree(ctx2.y(1), Filtration::Weighted) == 1);
    CHECK(ctx2.filtration_degree(ctx2.e(1, 1), Filtration::GOnly) == 1);
    CHECK(ctx2.filtration_degree(ctx2.x(1), Filtration::GOnly) == 0);
    CHECK_THROWS_AS(ctx.filtration_degree(ctx.zero(), Filtration::Standard), std::domain_error);
    CHECK_THROWS_AS(ctx.symbol(ctx.zero(), Filtration::Standard), std::domain_error);

    // yx = xy + b0 + 2e: weighted top (weight 2) is the xy part
    HbElem yx = ctx.mul(ctx.y(1), ctx.x(1));
    Poly sym = ctx.symbol(yx, Filtration::Weighted);
    CHECK(sym == Poly::var(VarId::x(1)) * Poly::var(VarId::y(1)));
    // GOnly top of the same element is 2 e11
    CHECK(ctx.symbol(yx, Filtration::GOnly) == Poly::var(VarId::e(1, 1)).scaled(Scalar::integer(2)));
}

TEST_CASE("filtration multiplicativity") {
    // Standard and Weighted are genuine algebra filtrations with domain
    // associated graded, so degrees add exactly; the Weighted graded is the
    // commutative A_m, so there symbols multiply as well. GOnly grades A_m,
    // not H_b (y x = x y + g-terms raises it), and is excluded here.
    Rng rng(202);
    HbContext ctx(2, 1, bparam({1, 1}));
    for (auto f : {Filtration::Standard, Filtration::Weighted}) {
        for (int trial = 0; trial < 15; ++trial) {
            HbElem a = random_elem(ctx, rng, 2, 3);
            HbElem b = random_elem(ctx, rng, 2, 3);
            if (a.is_zero() || b.is_zero()) continue;
            HbElem prod = ctx.mul(a, b);
            REQUIRE(!prod.is_zero());
            long da = ctx.filtration_degree(a, f), db = ctx.filtration_degree(b, f);
            long dp = ctx.filtration_degree(prod, f);
            CHECK(dp == da + db);
            if (f == Filtration::Weighted) CHECK(ctx.symbol(prod, f) == ctx.symbol(a, f) * ctx.symbol(b, f));
        }
    }
    // the GOnly counterexample: deg(y x) = 1 > deg y + deg x = 0
    HbElem yx = ctx.mul(ctx.y(1), ctx.x(1));
    CHECK(ctx.filtration_degree(yx, Filtration::GOnly) == 1);
}

TEST_CASE("exp_ad basics") {
    HbContext ctx(1, 1, bparam({3, 1}));
    CHECK(ctx.exp_ad(ctx.x(1), ctx.x(1)) == ctx.x(1));
    // ad y (x) = b0 + 2e, ad^2 y (x) = -2y, ad^3 = 0
    HbElem img = ctx.exp_ad(ctx.y(1), ctx.x(1));
    HbElem expect = ctx.x(1) + ctx.scalar(Scalar::integer(3)) + ctx.e(1, 1).scaled(Scalar::integer(2)) - ctx.y(1);
    CHECK(img == expect);
    CHECK_THROWS_AS(ctx.exp_ad(ctx.e(1, 1), ctx.x(1)), std::invalid_argument);
    CHECK_THROWS_AS(ctx.exp_ad(ctx.x(1) + ctx.y(1), ctx.x(1)), std::invalid_argument);
}

TEST_CASE("exp_ad is an algebra automorphism") {
    Rng rng(303);
    HbContext ctx(2, 1, bparam({1, 1}));
    HbElem v = ctx.x(1) + ctx.x(2).scaled(Scalar::fraction(1, 2));
    HbElem w = ctx.y(2).scaled(Scalar::integer(-2));
    for (int trial = 0; trial < 8; ++trial) {
        HbElem a = random_elem(ctx, rng, 2, 3);
        HbElem b = random_elem(ctx, rng, 2, 3);
        for (const HbElem* dir : {&v, &w}) {
            HbElem lhs = ctx.exp_ad(*dir, ctx.mul(a, b));
            HbElem rhs = ctx.mul(ctx.exp_ad(*dir, a), ctx.exp_ad(*dir, b));
            CHECK(lhs == rhs);
        }
    }
}
