#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "iwahori/padic_core.hpp"

using namespace iwahori;

namespace {

// independent valuation oracle: repeated trial division of an integer
long long val_by_division(BigInt n, int p) {
    REQUIRE(n != 0);
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

PadicRational rat(int p, long long num, long long den = 1) {
    return PadicRational::from_rational(p, BigRat(BigInt(num), BigInt(den)));
}

Mat2 mat(int p, long long a, long long b, long long c, long long d) {
    return Mat2::from_integers(p, a, b, c, d);
}

std::mt19937_64 rng(20240811u);

long long rnd(long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

}  // namespace

TEST_CASE("valuation on integers") {
    CHECK(*rat(3, 3).val() == 1);
    CHECK(*rat(3, 1, 3).val() == -1);
    CHECK(*rat(3, 18).val() == 2);  // 18 = 2 * 3^2
    CHECK(!rat(3, 0).val().has_value());

    // against the trial-division oracle
    for (int p : {2, 3, 5, 7}) {
        for (int i = 0; i < 200; ++i) {
            BigInt n = BigInt(rnd(1, 100000)) * (rnd(0, 1) ? 1 : -1);
            CHECK(*PadicRational::from_integer(p, n).val() == val_by_division(n, p));
        }
    }
}

TEST_CASE("canonical form is multiplicative") {
    for (int p : {2, 5}) {
        for (int i = 0; i < 300; ++i) {
            PadicRational x = rat(p, rnd(-500, 500), rnd(1, 500));
            PadicRational y = rat(p, rnd(-500, 500), rnd(1, 500));
            PadicRational z = x * y;
            if (!x.is_zero() && !y.is_zero()) {
                CHECK(*z.val() == *x.val() + *y.val());
                CHECK(numerator(z.unit()) % p != 0);
                CHECK(denominator(z.unit()) % p != 0);
            }
            CHECK(z.to_rational() == x.to_rational() * y.to_rational());
            CHECK((x + y).to_rational() == x.to_rational() + y.to_rational());
        }
    }
}

TEST_CASE("field ops and parsing round-trip") {
    int p = 5;
    PadicRational x = rat(p, 7, 10);
    CHECK(x * x.inverse() == PadicRational::one(p));
    CHECK(PadicRational::parse(p, x.str()) == x);
    CHECK(PadicRational::parse(p, "3/7*p^-2") ==
          rat(p, 3, 7) * PadicRational::p_power(p, -2));
    CHECK(PadicRational::parse(p, "p") == PadicRational::p_power(p, 1));
    CHECK(PadicRational::parse(p, "0") == PadicRational::zero(p));
    CHECK_THROWS_AS(PadicRational::parse(p, "x"), std::invalid_argument);
    CHECK_THROWS_AS(rat(p, 0).inverse(), std::domain_error);
}

TEST_CASE("matrix algebra") {
    int p = 3;
    CHECK(Mat2::alpha(p) * Mat2::w(p) == Mat2::beta(p));
    CHECK(Mat2::beta(p).inv() ==
          Mat2(p, PadicRational::zero(p), PadicRational::p_power(p, -1),
               PadicRational::one(p), PadicRational::zero(p)));
    CHECK(Mat2::alpha(p).det() == PadicRational::p_power(p, 1));
    CHECK_THROWS_AS(mat(p, 1, 2, 2, 4).inv(), std::domain_error);

    for (int i = 0; i < 100; ++i) {
        Mat2 g = mat(p, rnd(-9, 9), rnd(-9, 9), rnd(-9, 9), rnd(-9, 9));
        if (g.det().is_zero()) continue;
        CHECK(g * g.inv() == Mat2::identity(p));
        CHECK((g * Mat2::beta(p)).det() == g.det() * Mat2::beta(p).det());
    }
}

TEST_CASE("factor_KZ") {
    int p = 5;
    auto f = factor_KZ(Mat2::central_p_power(p, 1));
    REQUIRE(f.has_value());
    CHECK(f->m == 1);
    CHECK(f->u == Mat2::identity(p));

    CHECK(!factor_KZ(Mat2::alpha(p)).has_value());  // odd det valuation

    auto g = factor_KZ(Mat2::central_p_power(p, 1) * Mat2::w(p));
    REQUIRE(g.has_value());
    CHECK(g->m == 1);
    CHECK(g->u == Mat2::w(p));

    // round trip on random p^m * u
    for (int i = 0; i < 100; ++i) {
        Mat2 u = mat(p, rnd(-20, 20), rnd(-20, 20), rnd(-20, 20), rnd(-20, 20));
        if (!u.det().is_unit()) continue;
        long long m = rnd(-3, 3);
        Mat2 gm = u.scaled(PadicRational::p_power(p, m));
        auto fk = factor_KZ(gm);
        REQUIRE(fk.has_value());
        CHECK(fk->m == m);
        CHECK(fk->u == u);
        CHECK(fk->u.scaled(PadicRational::p_power(p, fk->m)) == gm);
    }
}

TEST_CASE("factor_IZ") {
    int p = 5;
    auto f = factor_IZ(Mat2::identity(p));
    REQUIRE(f.has_value());
    CHECK(f->m == 0);
    CHECK(f->u == Mat2::identity(p));

    CHECK(!factor_IZ(Mat2::w(p)).has_value());
    // (p 0; p p) = p * (1 0; 1 1), whose lower-left is a unit
    CHECK(!factor_IZ(mat(p, p, 0, p, p)).has_value());

    // IZ subset of KZ
    for (int i = 0; i < 200; ++i) {
        Mat2 g = mat(p, rnd(-30, 30), rnd(-30, 30), rnd(-30, 30), rnd(-30, 30));
        if (g.det().is_zero()) continue;
        auto fi = factor_IZ(g);
        if (fi) {
            auto fk = factor_KZ(g);
            REQUIRE(fk.has_value());
            CHECK(fk->m == fi->m);
            CHECK(fi->u.scaled(PadicRational::p_power(p, fi->m)) == g);
        }
    }
}

TEST_CASE("reduce_mod_p") {
    int p = 7;
    CHECK(reduce_mod_p(Mat2::identity(p)) == Gl2FpMat::identity(p));
    CHECK(reduce_mod_p(Mat2::upper_unipotent(p, p)) == Gl2FpMat::identity(p));
    CHECK(reduce_mod_p(Mat2::w(p)) == Gl2FpMat(p, 0, 1, 1, 0));
    CHECK_THROWS_AS(reduce_mod_p(Mat2::alpha(p)), std::domain_error);
}

TEST_CASE("char_value") {
    int p = 5;
    auto F = FqField::get(p, 1);
    CHECK(char_value(mat(p, 1, 0, 0, 2), CharKind::d, 1, F) == FqScalar(F, 2));
    CHECK(char_value(mat(p, 3, 0, 0, 2), CharKind::a, 2, F) == FqScalar(F, 4));
    CHECK_THROWS_AS(char_value(Mat2::w(p), CharKind::d, 1, F), std::domain_error);

    // d^(p-1) is trivial on I, and char_value is multiplicative
    for (int i = 0; i < 200; ++i) {
        Mat2 u = mat(p, rnd(1, p - 1), rnd(-9, 9), p * rnd(-9, 9), rnd(1, p - 1));
        Mat2 v = mat(p, rnd(1, p - 1), rnd(-9, 9), p * rnd(-9, 9), rnd(1, p - 1));
        if (!factor_IZ(u) || !factor_IZ(v)) continue;
        CHECK(char_value(u, CharKind::d, p - 1, F) == FqScalar::one(F));
        for (auto kind : {CharKind::d, CharKind::a}) {
            CHECK(char_value(u * v, kind, 3, F) ==
                  char_value(u, kind, 3, F) * char_value(v, kind, 3, F));
        }
    }
}

TEST_CASE("finite field arithmetic") {
    for (int p : {2, 3, 5, 13}) {
        auto F = FqField::get(p, 2);
        // modulus is the base-p smallest monic irreducible of degree 2
        if (p == 2) CHECK(F->modulus == std::vector<int>{1, 1, 1});
        if (p == 3) CHECK(F->modulus == std::vector<int>{1, 0, 1});
        if (p == 5) CHECK(F->modulus == std::vector<int>{2, 0, 1});
        FqScalar x = FqScalar::from_coeffs(F, {1, 1});
        FqScalar y = x;
        FqScalar prod = FqScalar::one(F);
        long long order = 0;
        do {
            prod = prod * x;
            ++order;
        } while (!(prod == FqScalar::one(F)));
        CHECK((F->q() - 1) % order == 0);
        CHECK(y * y.inverse() == FqScalar::one(F));
        CHECK(y.pow(F->q() - 1) == FqScalar::one(F));
        CHECK((y - y).is_zero());
    }
    auto F3 = FqField::get(3, 1);
    CHECK(FqScalar(F3, 2) * FqScalar(F3, 2) == FqScalar(F3, 1));
    CHECK_THROWS_AS(FqScalar::zero(F3).inverse(), std::domain_error);
}

TEST_CASE("lift set and prime predicate") {
    CHECK(lifts(3) == std::vector<int>{0, 1, 2});
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(!is_prime(1));
    CHECK(!is_prime(9));
    CHECK(enumerate_gl2(2).size() == 6);
    CHECK(enumerate_gl2(3).size() == 48);
}
