#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "iwahori/inductions.hpp"
#include "test_support.hpp"

using namespace iwahori;
using testsup::Rand;

namespace {

VrElement mono(const FqFieldPtr& f, long long r, long long ydeg, int coeff = 1) {
    return VrElement::monomial(f, r, ydeg, FqScalar(f, coeff));
}

VrElement p0_polynomial(const FqFieldPtr& f) {
    int p = f->p;
    VrElement v(f, 2 * p - 2);
    v.set_coeff(2 * p - 2, FqScalar::one(f));
    v.set_coeff(p - 1, -FqScalar::one(f));
    return v;
}

IwahoriElement e0_ind(const FqFieldPtr& f, CharKind kind = CharKind::d, long long r = 0) {
    return IwahoriElement::indicator(f, kind, r, base_edge(f->p));
}

}  // namespace

TEST_CASE("normalize_spherical") {
    for (int p : {3, 5}) {
        auto F = FqField::get(p, 1);
        // [w, X^r] = [id, Y^r]
        for (long long r : {0LL, static_cast<long long>(p - 1)}) {
            SphericalElement x = normalize_spherical(Mat2::w(p), mono(F, r, 0));
            SphericalElement expected = SphericalElement::single(
                F, weight_vr(r), base_vertex(), mono(F, r, r));
            CHECK(x == expected);
        }
        // center acts trivially
        VrElement v = mono(F, p - 1, 1);
        CHECK(normalize_spherical(Mat2::central_p_power(p, 1), v) ==
              normalize_spherical(Mat2::identity(p), v));

        // [beta u_lambda w, P0] = [beta, X^{2p-2} - (lambda X + Y)^{p-1} X^{p-1}]
        for (int lambda = 0; lambda < p; ++lambda) {
            Mat2 g = Mat2::beta(p) * Mat2::upper_unipotent(p, lambda) * Mat2::w(p);
            SphericalElement got = normalize_spherical(g, p0_polynomial(F));
            VrElement moved = gl2_act(Gl2FpMat(p, lambda, 1, 1, 0), p0_polynomial(F));
            SphericalElement expected = normalize_spherical(Mat2::beta(p), moved);
            CHECK(got == expected);
            REQUIRE(got.support_size() == 1);
            CHECK(got.support().begin()->first == vertex_normal_form(Mat2::beta(p)));
        }
    }
}

TEST_CASE("normalize_iwahori") {
    int p = 5;
    auto F = FqField::get(p, 1);
    // identity gives coefficient 1 at the base edge
    IwahoriElement x = normalize_iwahori(Mat2::identity(p), FqScalar::one(F), CharKind::d, 1);
    REQUIRE(x.support_size() == 1);
    CHECK(x.support().begin()->first == base_edge(p));
    CHECK(x.support().begin()->second == FqScalar::one(F));

    // u in I gives d^r(u) at the base edge
    Rand rng(11);
    for (int i = 0; i < 50; ++i) {
        Mat2 u = testsup::random_iz_element(p, rng, false);
        for (long long r : {1LL, 2LL}) {
            IwahoriElement y = normalize_iwahori(u, FqScalar::one(F), CharKind::d, r);
            REQUIRE(y.support_size() == 1);
            CHECK(y.support().begin()->first == base_edge(p));
            CHECK(y.support().begin()->second == char_value(u, CharKind::d, r, F));
        }
    }
    // center trivial
    CHECK(normalize_iwahori(Mat2::beta(p) * Mat2::central_p_power(p, 1), FqScalar::one(F),
                            CharKind::d, 1) ==
          normalize_iwahori(Mat2::beta(p), FqScalar::one(F), CharKind::d, 1));
}

TEST_CASE("well-definedness under representative change") {
    // normalizing g*k equals the character/weight action on the normalization of g
    for (int p : {2, 3, 5}) {
        auto F = FqField::get(p, 1);
        Rand rng(23 + p);
        for (int i = 0; i < 200; ++i) {
            Mat2 g = testsup::random_group_element(p, rng);
            Mat2 k = testsup::random_iz_element(p, rng);
            for (long long r = 0; r < p - 1; ++r) {
                for (auto kind : {CharKind::d, CharKind::a}) {
                    IwahoriElement lhs = normalize_iwahori(g * k, FqScalar::one(F), kind, r);
                    IwahoriElement rhs = normalize_iwahori(g, char_value(k, kind, r, F), kind, r);
                    CHECK(lhs == rhs);
                }
            }
            // spherical side with k in KZ
            Mat2 kk = testsup::random_kz_element(p, rng);
            auto fk = factor_KZ(kk);
            REQUIRE(fk.has_value());
            VrElement v = mono(F, 2 * p - 2, static_cast<long long>(rng.below(2 * p - 1)));
            CHECK(normalize_spherical(g * kk, v) ==
                  normalize_spherical(g, gl2_act(reduce_mod_p(fk->u), v)));
        }
    }
}

TEST_CASE("add scale eq") {
    int p = 3;
    auto F = FqField::get(p, 1);
    Rand rng(31);
    for (int i = 0; i < 40; ++i) {
        IwahoriElement x = random_iwahori(F, CharKind::d, 0, 2, 4, rng.gen());
        IwahoriElement y = random_iwahori(F, CharKind::d, 0, 2, 4, rng.gen());
        CHECK(x + IwahoriElement(F, CharKind::d, 0) == x);
        CHECK((x - x).is_zero());
        FqScalar s(F, 2);
        CHECK((x + y).scaled(s) == x.scaled(s) + y.scaled(s));
    }
    SphericalElement z = random_spherical(F, weight_vr(1), 2, 3, 99);
    CHECK((z - z).is_zero());
    CHECK(z + SphericalElement(F, weight_vr(1)) == z);
}

TEST_CASE("act_g laws") {
    int p = 3;
    auto F = FqField::get(p, 1);
    Rand rng(41);
    for (int i = 0; i < 100; ++i) {
        Mat2 g = testsup::random_group_element(p, rng);
        Mat2 h = testsup::random_group_element(p, rng);
        IwahoriElement x = random_iwahori(F, CharKind::d, 0, 2, 3, rng.gen());
        CHECK(act_g(Mat2::identity(p), x) == x);
        CHECK(act_g(g, act_g(h, x)) == act_g(g * h, x));

        SphericalElement y = random_spherical(F, weight_quotient(p), 2, 3, rng.gen());
        CHECK(act_g(Mat2::identity(p), y) == y);
        CHECK(act_g(g, act_g(h, y)) == act_g(g * h, y));
    }
}

TEST_CASE("spherical Hecke operator on generators") {
    for (int p : {2, 3, 5}) {
        auto F = FqField::get(p, 1);
        // r = 0: T[id, 1] supported on the p+1 neighbors of the base vertex
        SphericalElement one_at_base =
            SphericalElement::single(F, weight_vr(0), base_vertex(), mono(F, 0, 0));
        SphericalElement t = T_spherical(one_at_base);
        auto nb = neighbors(base_vertex(), p);
        std::set<VertexKey> expected(nb.begin(), nb.end());
        std::set<VertexKey> got;
        for (const auto& [v, val] : t.support()) {
            got.insert(v);
            CHECK(val == mono(F, 0, 0));
        }
        CHECK(got == expected);

        // r > 0: T[id, X^r] = sum over lifts of [(p l; 0 1), X^r]
        if (p > 2) {
            long long r = 1;
            SphericalElement xr =
                SphericalElement::single(F, weight_vr(r), base_vertex(), mono(F, r, 0));
            SphericalElement tx = T_spherical(xr);
            SphericalElement expected_el(F, weight_vr(r));
            for (int lambda = 0; lambda < p; ++lambda) {
                Mat2 m = Mat2::from_integers(p, p, lambda, 0, 1);
                expected_el = expected_el + normalize_spherical(m, mono(F, r, 0));
            }
            CHECK(tx == expected_el);
        }
    }
}

TEST_CASE("T is well-defined and equivariant") {
    for (int p : {2, 3}) {
        auto F = FqField::get(p, 1);
        Rand rng(53 + p);
        for (int i = 0; i < 60; ++i) {
            Mat2 k = testsup::random_kz_element(p, rng);
            for (Weight w : {weight_vr(p - 1), weight_quotient(p)}) {
                SphericalElement x = random_spherical(F, w, 2, 3, rng.gen());
                CHECK(T_spherical(act_g(k, x)) == act_g(k, T_spherical(x)));
                Mat2 g = testsup::random_group_element(p, rng);
                CHECK(T_spherical(act_g(g, x)) == act_g(g, T_spherical(x)));
            }
        }
    }
}

TEST_CASE("Iwahori operators on generators") {
    for (int p : {2, 3, 5}) {
        auto F = FqField::get(p, 1);
        IwahoriElement e0 = e0_ind(F);
        // T10 of the base indicator is the reverse-edge indicator
        IwahoriElement t10 = T10(e0);
        CHECK(t10 == IwahoriElement::indicator(F, CharKind::d, 0, reverse(base_edge(p))));

        // T12 of the base indicator: p terms at the edges (1 0; pl p).e0
        IwahoriElement t12 = T12(e0);
        IwahoriElement expected12(F, CharKind::d, 0);
        for (int lambda = 0; lambda < p; ++lambda) {
            Mat2 m = Mat2::from_integers(p, 1, 0, static_cast<long long>(p) * lambda, p);
            expected12 = expected12 + normalize_iwahori(m, FqScalar::one(F), CharKind::d, 0);
        }
        CHECK(t12 == expected12);
        CHECK(t12.support_size() == static_cast<size_t>(p));

        // support of T12(e) = continuations(e)
        auto cont = continuations(base_edge(p), p);
        std::set<EdgeKey> cs(cont.begin(), cont.end());
        std::set<EdgeKey> ts;
        for (const auto& [e, c] : t12.support()) {
            ts.insert(e);
            CHECK(c == FqScalar::one(F));
        }
        CHECK(ts == cs);

        // Tm10 of the base indicator: sum over (p l; 0 1)
        IwahoriElement tm = Tm10(e0);
        IwahoriElement expected_m(F, CharKind::d, 0);
        for (int lambda = 0; lambda < p; ++lambda) {
            Mat2 m = Mat2::from_integers(p, p, lambda, 0, 1);
            expected_m = expected_m + normalize_iwahori(m, FqScalar::one(F), CharKind::d, 0);
        }
        CHECK(tm == expected_m);
    }
}

TEST_CASE("non-commutative relations") {
    for (int p : {2, 3, 5}) {
        auto F = FqField::get(p, 1);
        Rand rng(61 + p);
        for (int i = 0; i < 50; ++i) {
            IwahoriElement x = random_iwahori(F, CharKind::d, 0, 3, 4, rng.gen());
            CHECK(T10(T10(x)) == x);
            CHECK(T12(T10(T12(x))) == T12(x).scaled(-FqScalar::one(F)));
            CHECK(Tm10(x) == T10(T12(T10(x))));
        }
    }
}

TEST_CASE("commutative relations for middle exponents") {
    for (int p : {3, 5}) {
        auto F = FqField::get(p, 1);
        Rand rng(67 + p);
        for (long long r = 1; r <= p - 2; ++r) {
            for (int i = 0; i < 30; ++i) {
                IwahoriElement x = random_iwahori(F, CharKind::d, r, 2, 3, rng.gen());
                CHECK(Tm10(T12(x)).is_zero());
                CHECK(T12(Tm10(x)).is_zero());
            }
        }
    }
}

TEST_CASE("operator equivariance on the Iwahori side") {
    int p = 3;
    auto F = FqField::get(p, 1);
    Rand rng(71);
    for (int i = 0; i < 60; ++i) {
        Mat2 h = testsup::random_group_element(p, rng);
        IwahoriElement x = random_iwahori(F, CharKind::d, 0, 2, 3, rng.gen());
        CHECK(T10(act_g(h, x)) == act_g(h, T10(x)));
        CHECK(T12(act_g(h, x)) == act_g(h, T12(x)));
        CHECK(Tm10(act_g(h, x)) == act_g(h, Tm10(x)));
        IwahoriElement y = random_iwahori(F, CharKind::d, 1, 2, 3, rng.gen());
        CHECK(T12(act_g(h, y)) == act_g(h, T12(y)));
        CHECK(Tm10(act_g(h, y)) == act_g(h, Tm10(y)));
    }
}

TEST_CASE("eta twists") {
    int p = 5;
    auto F = FqField::get(p, 1);
    Rand rng(83);
    SmoothCharSymbol triv = SmoothCharSymbol::trivial(F);
    SmoothCharSymbol eta(FqScalar(F, 2), 3);
    for (int i = 0; i < 40; ++i) {
        IwahoriElement x = random_iwahori(F, CharKind::d, 1, 2, 3, rng.gen());
        CHECK(twist_eta(x, triv) == x);
        CHECK(twist_eta(twist_eta(x, eta), eta.inverse()) == x);
        SphericalElement y = random_spherical(F, weight_vr(2), 2, 3, rng.gen());
        CHECK(twist_eta(y, triv) == y);
        CHECK(twist_eta(twist_eta(y, eta), eta.inverse()) == y);
        // commutes with add and scale
        SphericalElement z = random_spherical(F, weight_vr(2), 2, 3, rng.gen());
        CHECK(twist_eta(y + z, eta) == twist_eta(y, eta) + twist_eta(z, eta));
        CHECK(twist_eta(y.scaled(FqScalar(F, 3)), eta) ==
              twist_eta(y, eta).scaled(FqScalar(F, 3)));
    }
}

TEST_CASE("random elements are reproducible and in range") {
    int p = 3;
    auto F = FqField::get(p, 1);
    CHECK(random_iwahori(F, CharKind::d, 0, 2, 5, 42) ==
          random_iwahori(F, CharKind::d, 0, 2, 5, 42));
    CHECK(random_iwahori(F, CharKind::d, 0, 2, 0, 42).is_zero());
    auto edges = edge_ball(p, 2);
    std::set<EdgeKey> ballset(edges.begin(), edges.end());
    for (unsigned long long s = 0; s < 20; ++s) {
        IwahoriElement x = random_iwahori(F, CharKind::d, 0, 2, 6, s);
        for (const auto& [e, c] : x.support()) {
            CHECK(ballset.count(e) == 1);
            CHECK(!c.is_zero());
        }
    }
    CHECK(random_spherical(F, weight_quotient(p), 2, 4, 7) ==
          random_spherical(F, weight_quotient(p), 2, 4, 7));
    CHECK(random_spherical(F, weight_vr(0), 2, 0, 7).is_zero());
}
