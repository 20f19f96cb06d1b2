#include <stdexcept>

#include "doctest.h"
#include "twistdec/poly.hpp"
#include "twistdec/testkit.hpp"

using namespace twistdec;

namespace {

Poly random_poly(const FieldPtr& f, int deg, Rng& rng) {
    if (deg < 0) return poly_zero(f);
    std::vector<uint32_t> c(size_t(deg) + 1);
    for (auto& x : c) x = uint32_t(rng.below(f->q()));
    if (c.back() == 0) c.back() = 1;
    return make_poly(f, std::move(c));
}

Poly schoolbook_mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return poly_zero(a.f);
    std::vector<uint32_t> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = a.f->add(c[i + j], a.f->mul(a.c[i], b.c[j]));
    return make_poly(a.f, std::move(c));
}

}  // namespace

TEST_CASE("degree sentinel and basic shapes") {
    auto F = Field::make(23);
    Poly z = poly_zero(F);
    CHECK(z.is_zero());
    CHECK(z.degree() == kDegNegInf);
    CHECK(kDegNegInf + kDegNegInf < kDegNegInf);  // safely summable, stays tiny
    CHECK(kDegNegInf < -1);
    CHECK_THROWS_AS(z.lead(), std::invalid_argument);

    Poly c5 = poly_const(F, 5);
    CHECK(c5.degree() == 0);
    CHECK(poly_const(F, 0).is_zero());
    CHECK(poly_const(F, 0).degree() == kDegNegInf);
    CHECK(poly_x(F).degree() == 1);
    CHECK(poly_x(F).coeff(1) == 1);
    CHECK(poly_x(F).coeff(7) == 0);

    // trailing zeros are normalized away
    Poly t = make_poly(F, {1, 2, 0, 0});
    CHECK(t.degree() == 1);
    CHECK(t == make_poly(F, {1, 2}));
}

TEST_CASE("ring identities on random polynomials") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{23, 1}, {2, 3}, {7, 1}}) {
        auto F = Field::make(p, e);
        Rng rng(p + 31 * e);
        for (int i = 0; i < 100; ++i) {
            Poly a = random_poly(F, int(rng.below(12)) - 1, rng);
            Poly b = random_poly(F, int(rng.below(12)) - 1, rng);
            Poly c = random_poly(F, int(rng.below(12)) - 1, rng);
            CHECK(add(a, b) == add(b, a));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(sub(a, b) == sub(poly_zero(F), sub(b, a)));
            CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            CHECK(add(sub(a, b), b) == a);
            CHECK(mul(a, poly_const(F, 1)) == a);
            CHECK(mul(a, poly_zero(F)).is_zero());
            CHECK(scale(a, 2) == mul(a, poly_const(F, 2)));
        }
    }
}

TEST_CASE("product degree and cancellation") {
    auto F = Field::make(23);
    Poly xp1 = make_poly(F, {1, 1});
    Poly xm1 = make_poly(F, {22, 1});
    CHECK(mul(xp1, xm1) == make_poly(F, {22, 0, 1}));
    CHECK(sub(xp1, xp1).is_zero());
    CHECK(add(xp1, scale(xp1, 22)).is_zero());
}

TEST_CASE("karatsuba agrees with schoolbook far past the cutoff") {
    for (auto [p, e] : {std::pair<uint32_t, uint32_t>{23, 1}, {2, 4}}) {
        auto F = Field::make(p, e);
        Rng rng(p * 17 + e);
        for (int deg_a : {0, 1, 31, 32, 33, 64, 100, 257}) {
            for (int deg_b : {0, 5, 32, 97, 200}) {
                Poly a = random_poly(F, deg_a, rng);
                Poly b = random_poly(F, deg_b, rng);
                CHECK(mul(a, b) == schoolbook_mul(a, b));
            }
        }
    }
}

TEST_CASE("quotrem long division") {
    auto F = Field::make(23);
    SUBCASE("x^3 by x - 1") {
        auto [q, r] = quotrem(make_poly(F, {0, 0, 0, 1}), make_poly(F, {22, 1}));
        CHECK(q == make_poly(F, {1, 1, 1}));
        CHECK(r == poly_const(F, 1));
    }
    SUBCASE("division by a constant") {
        auto [q, r] = quotrem(make_poly(F, {4, 8}), poly_const(F, 2));
        CHECK(q == make_poly(F, {2, 4}));
        CHECK(r.is_zero());
    }
    SUBCASE("divisor larger than dividend") {
        auto [q, r] = quotrem(make_poly(F, {5}), make_poly(F, {0, 0, 1}));
        CHECK(q.is_zero());
        CHECK(r == poly_const(F, 5));
    }
    SUBCASE("zero dividend") {
        auto [q, r] = quotrem(poly_zero(F), make_poly(F, {1, 1}));
        CHECK(q.is_zero());
        CHECK(r.is_zero());
    }
    SUBCASE("division by zero throws") {
        CHECK_THROWS_AS(quotrem(make_poly(F, {1, 1}), poly_zero(F)), std::invalid_argument);
    }
    SUBCASE("a == q*b + r with deg r < deg b on random inputs") {
        for (auto [p, e] : {std::pair<uint32_t, uint32_t>{23, 1}, {2, 3}}) {
            auto G = Field::make(p, e);
            Rng rng(p + e);
            for (int i = 0; i < 200; ++i) {
                Poly a = random_poly(G, int(rng.below(16)) - 1, rng);
                Poly b = random_poly(G, int(rng.below(8)), rng);
                auto [q, r] = quotrem(a, b);
                CHECK(add(mul(q, b), r) == a);
                CHECK(r.degree() < b.degree());
            }
        }
    }
}

TEST_CASE("evaluation") {
    auto F = Field::make(23);
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        Poly f = random_poly(F, int(rng.below(9)) - 1, rng);
        uint32_t a = uint32_t(rng.below(23));
        // naive power-sum oracle
        uint32_t want = 0, pw = 1;
        for (uint32_t c : f.c) {
            want = F->add(want, F->mul(c, pw));
            pw = F->mul(pw, a);
        }
        CHECK(poly_eval(f, a) == want);
    }
    Poly f = make_poly(F, {1, 0, 1});
    std::vector<uint32_t> pts = {0, 1, 2, 5};
    std::vector<uint32_t> vals = multipoint_eval(f, pts);
    REQUIRE(vals.size() == 4);
    for (size_t i = 0; i < pts.size(); ++i) CHECK(vals[i] == poly_eval(f, pts[i]));
    CHECK(poly_eval(poly_zero(F), 7) == 0);
}

TEST_CASE("composition") {
    auto F = Field::make(23);
    Rng rng(8);
    Poly x = poly_x(F);
    for (int i = 0; i < 60; ++i) {
        Poly f = random_poly(F, int(rng.below(7)) - 1, rng);
        Poly g = random_poly(F, int(rng.below(5)) - 1, rng);
        CHECK(compose(f, x) == f);
        Poly h = compose(f, g);
        for (uint32_t a = 0; a < 23; ++a)
            CHECK(poly_eval(h, a) == poly_eval(f, poly_eval(g, a)));
    }
    CHECK(compose(make_poly(F, {0, 0, 1}), make_poly(F, {1, 1})) == make_poly(F, {1, 2, 1}));
}

TEST_CASE("univariate roots") {
    auto F7 = Field::make(7);
    CHECK(univariate_roots(make_poly(F7, {1, 0, 1})).empty());  // x^2 + 1, -1 not a square
    auto F23 = Field::make(23);
    CHECK(univariate_roots(make_poly(F23, {22, 0, 1})) == std::vector<uint32_t>{1, 22});
    CHECK(univariate_roots(make_poly(F23, {0, 20, 1})) == std::vector<uint32_t>{0, 3});
    CHECK(univariate_roots(poly_const(F23, 5)).empty());
    CHECK_THROWS_AS(univariate_roots(poly_zero(F23)), std::invalid_argument);

    SUBCASE("field size above the cap throws") {
        auto big = Field::make(2, 17);  // 131072 elements
        CHECK_THROWS_AS(univariate_roots(poly_x(big), 1 << 16), std::invalid_argument);
        CHECK(univariate_roots(poly_x(big), uint64_t(1) << 18) == std::vector<uint32_t>{0});
    }

    SUBCASE("roots of a built product") {
        Rng rng(12);
        for (int i = 0; i < 40; ++i) {
            uint32_t r1 = uint32_t(rng.below(23)), r2 = uint32_t(rng.below(23));
            if (r1 == r2) continue;
            Poly f = mul(make_poly(F23, {F23->neg(r1), 1}), make_poly(F23, {F23->neg(r2), 1}));
            auto roots = univariate_roots(f);
            CHECK(roots == std::vector<uint32_t>{std::min(r1, r2), std::max(r1, r2)});
        }
    }
}
