#include <algorithm>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "twistdec/gs.hpp"
#include "twistdec/testkit.hpp"

using namespace twistdec;

namespace {

GrsSpec full_grs(uint32_t p, uint32_t k) {
    auto F = Field::make(p);
    std::vector<uint32_t> alphas(p), vs(p, 1);
    for (uint32_t i = 0; i < p; ++i) alphas[i] = i;
    return make_grs_spec(F, alphas, vs, k);
}

// independent recount of { (i, j) : i + (k-1) j < D, i, j >= 0 }, with the
// same j clip the production rule applies at k = 1
uint64_t count_monomials(uint32_t k, int D) {
    uint64_t count = 0;
    if (k == 1) return uint64_t(D) * (uint64_t(D) + 1);
    for (int j = 0;; ++j) {
        int limit = D - (int(k) - 1) * j;
        if (limit <= 0) break;
        count += uint64_t(limit);
    }
    return count;
}

uint32_t hamming(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    uint32_t d = 0;
    for (size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
    return d;
}

}  // namespace

TEST_CASE("grs spec validation and encoding") {
    auto F = Field::make(23);
    GrsSpec spec = full_grs(23, 5);
    CHECK(spec.n() == 23);

    SUBCASE("encode is scaled evaluation") {
        std::vector<uint32_t> vs(23);
        for (uint32_t i = 0; i < 23; ++i) vs[i] = (i % 22) + 1;
        GrsSpec scaled = make_grs_spec(F, spec.alphas, vs, 3);
        Rng rng(1);
        for (int t = 0; t < 50; ++t) {
            std::vector<uint32_t> m = random_message(*F, 3, rng);
            auto cw = grs_encode(scaled, m);
            Poly f = make_poly(F, m);
            for (uint32_t i = 0; i < 23; ++i)
                CHECK(cw[i] == F->mul(vs[i], poly_eval(f, spec.alphas[i])));
        }
    }

    SUBCASE("bad parameters throw") {
        std::vector<uint32_t> alphas = {0, 1, 2, 2};
        std::vector<uint32_t> vs = {1, 1, 1, 1};
        CHECK_THROWS_AS(make_grs_spec(F, alphas, vs, 2), std::invalid_argument);
        CHECK_THROWS_AS(make_grs_spec(F, {0, 1, 2}, {1, 0, 1}, 2), std::invalid_argument);
        CHECK_THROWS_AS(make_grs_spec(F, {0, 1, 2}, {1, 1, 1}, 4), std::invalid_argument);
        CHECK_THROWS_AS(make_grs_spec(F, {0, 1, 2}, {1, 1, 1}, 0), std::invalid_argument);
        CHECK_THROWS_AS(make_grs_spec(F, {0, 1, 2}, {1, 1}, 2), std::invalid_argument);
        std::vector<uint32_t> too_many(24, 0);
        for (uint32_t i = 0; i < 24; ++i) too_many[i] = i % 23;
        CHECK_THROWS_AS(make_grs_spec(F, too_many, std::vector<uint32_t>(24, 1), 2),
                        std::invalid_argument);
        CHECK_THROWS_AS(grs_encode(spec, {1, 2, 3}), std::invalid_argument);
    }
}

TEST_CASE("multiplicity selection") {
    CHECK(select_multiplicity(7, 2, 3) == 1);
    CHECK(select_multiplicity(23, 6, 11) == 2);
    CHECK(select_multiplicity(23, 6, 9) == 1);
    CHECK(select_multiplicity(64, 16, 22) == 1);
    CHECK(select_multiplicity(64, 17, 28) == 2);
    SUBCASE("radius zero is always s = 1") {
        CHECK(select_multiplicity(23, 6, 0) == 1);
        CHECK(select_multiplicity(5, 5, 0) == 1);
        CHECK(select_multiplicity(1, 1, 0) == 1);
    }
    SUBCASE("infeasible radius names the boundary") {
        CHECK(max_feasible_radius(23, 6) == 11);
        try {
            select_multiplicity(23, 6, 12);
            FAIL("expected InfeasibleRadius");
        } catch (const InfeasibleRadius& e) {
            CHECK(e.max_feasible_tau == 11);
            CHECK(std::string(e.what()).find("11") != std::string::npos);
        }
        CHECK_THROWS_AS(select_multiplicity(5, 5, 1), InfeasibleRadius);
        CHECK_THROWS_AS(select_multiplicity(23, 6, 22), InfeasibleRadius);
    }
    SUBCASE("selected s is minimal and sufficient") {
        for (uint32_t n : {7u, 10u, 23u}) {
            for (uint32_t k = 1; k <= 6 && k <= n; ++k) {
                uint32_t max_tau = max_feasible_radius(n, k);
                for (uint32_t tau = 0; tau <= max_tau; ++tau) {
                    uint32_t s = select_multiplicity(n, k, tau);
                    int D = int(s) * int(n - tau);
                    CHECK(count_monomials(k, D) > uint64_t(n) * s * (s + 1) / 2);
                    if (s > 1 && tau > 0) {
                        int Dm = int(s - 1) * int(n - tau);
                        CHECK(count_monomials(k, Dm) <= uint64_t(n) * (s - 1) * s / 2);
                    }
                }
                CHECK_THROWS_AS(select_multiplicity(n, k, max_tau + 1), InfeasibleRadius);
            }
        }
    }
}

TEST_CASE("parameter assembly lists monomials in low-weight order") {
    GsParams params = make_gs_params(23, 6, 11);
    CHECK(params.s == 2);
    CHECK(params.D == 24);
    CHECK(params.monomials.size() == count_monomials(6, 24));
    for (auto [i, j] : params.monomials) CHECK(i + 5 * j < 24);
    std::set<std::pair<int, int>> uniq(params.monomials.begin(), params.monomials.end());
    CHECK(uniq.size() == params.monomials.size());
    for (size_t t = 1; t < params.monomials.size(); ++t) {
        auto [i0, j0] = params.monomials[t - 1];
        auto [i1, j1] = params.monomials[t];
        CHECK((j0 < j1 || (j0 == j1 && i0 < i1)));
    }

    SUBCASE("dimension one clips the y-degree instead of looping forever") {
        GsParams one = make_gs_params(7, 1, 3);
        CHECK(one.s >= 1);
        for (auto [i, j] : one.monomials) {
            CHECK(i < one.D);
            CHECK(j <= int(count_monomials(1, one.D) / uint64_t(one.D)));
        }
        CHECK(one.monomials.size() > uint64_t(7) * one.s * (one.s + 1) / 2);
    }
}

TEST_CASE("interpolation meets its three contracts") {
    auto F = Field::make(23);
    SUBCASE("exact codeword at s = 1 vanishes on the curve") {
        GsParams params = make_gs_params(23, 5, 0);
        Poly f = make_poly(F, {4, 2, 10, 11});
        std::vector<std::pair<uint32_t, uint32_t>> pts;
        for (uint32_t i = 0; i < 23; ++i) pts.push_back({i, poly_eval(f, i)});
        BiPoly Q = interpolate(F, pts, params);
        CHECK(!Q.is_zero());
        CHECK(wdeg(Q, 4) < params.D);
        CHECK(compose(Q, f).is_zero());
    }
    SUBCASE("multiplicity two at three collinear points") {
        GsParams params;
        params.n = 3;
        params.k = 2;
        params.tau = 0;
        params.s = 2;
        params.D = 6;
        for (int j = 0; j * 1 < 6; ++j)
            for (int i = 0; i + j < 6; ++i) params.monomials.push_back({i, j});
        std::vector<std::pair<uint32_t, uint32_t>> pts = {{1, 1}, {2, 2}, {5, 5}};
        BiPoly Q = interpolate(F, pts, params);
        CHECK(!Q.is_zero());
        for (auto [x, y] : pts) CHECK(multiplicity_at(Q, x, y) >= 2);
        CHECK(compose(Q, poly_x(F)).is_zero());
    }
    SUBCASE("repeated x-coordinates are rejected") {
        GsParams params = make_gs_params(23, 2, 0);
        std::vector<std::pair<uint32_t, uint32_t>> pts(23, {1, 1});
        CHECK_THROWS_AS(interpolate(F, pts, params), std::invalid_argument);
    }
}

TEST_CASE("root extraction") {
    auto F = Field::make(23);
    SUBCASE("a split product returns both factors in coefficient order") {
        Poly f = make_poly(F, {3, 1});
        Poly g = make_poly(F, {5, 2});
        // (y - f)(y - g) expanded by hand
        BiPoly Q = make_bipoly(F);
        bipoly_set(Q, 0, 2, 1);
        // -(f+g) y coefficient, as polynomials in x
        Poly s = add(f, g);
        for (int i = 0; i <= s.degree(); ++i) bipoly_set(Q, i, 1, F->neg(s.coeff(size_t(i))));
        Poly prod = mul(f, g);
        for (int i = 0; i <= prod.degree(); ++i) bipoly_set(Q, i, 0, prod.coeff(size_t(i)));
        auto roots = rr_roots(Q, 2);
        REQUIRE(roots.size() == 2);
        CHECK(roots[0] == f);
        CHECK(roots[1] == g);
        CHECK(poly_coeff_less(roots[0], roots[1]));
    }
    SUBCASE("no y-roots when the constant line has none") {
        auto F7 = Field::make(7);
        BiPoly Q = make_bipoly(F7);  // y^2 + 1
        bipoly_set(Q, 0, 2, 1);
        bipoly_set(Q, 0, 0, 1);
        CHECK(rr_roots(Q, 1).empty());
        CHECK(rr_roots(Q, 3).empty());
    }
    SUBCASE("x y has exactly the zero root") {
        BiPoly Q = make_bipoly(F);
        bipoly_set(Q, 1, 1, 1);
        auto roots = rr_roots(Q, 3);
        REQUIRE(roots.size() == 1);
        CHECK(roots[0].is_zero());
    }
}

TEST_CASE("list decoding matches the exhaustive oracle on GF(7)") {
    GrsSpec spec = full_grs(7, 2);
    CodeVariant code = spec;
    Rng rng(77);
    for (uint32_t tau = 0; tau <= 3; ++tau) {
        for (int t = 0; t < 200; ++t) {
            std::vector<uint32_t> r = random_message(*spec.f, 7, rng);
            DecodeList out = gs_list_decode(spec, r, tau);
            std::vector<std::vector<uint32_t>> got;
            for (const auto& c : out.candidates) {
                CHECK(c.distance <= tau);
                std::vector<uint32_t> m(2);
                m[0] = c.f.coeff(0);
                m[1] = c.f.coeff(1);
                CHECK(hamming(grs_encode(spec, m), r) == c.distance);
                got.push_back(m);
            }
            std::vector<std::vector<uint32_t>> want = nearest_list(code, r, tau);
            std::set<std::vector<uint32_t>> got_set(got.begin(), got.end());
            CHECK(got_set.size() == got.size());
            CHECK(got_set == std::set<std::vector<uint32_t>>(want.begin(), want.end()));
        }
    }
}

TEST_CASE("candidates come back sorted and deduplicated") {
    GrsSpec spec = full_grs(7, 2);
    Rng rng(5);
    for (int t = 0; t < 60; ++t) {
        std::vector<uint32_t> r = random_message(*spec.f, 7, rng);
        DecodeList out = gs_list_decode(spec, r, 3);
        for (size_t i = 1; i < out.candidates.size(); ++i) {
            const auto& a = out.candidates[i - 1];
            const auto& b = out.candidates[i];
            CHECK((a.distance < b.distance ||
                   (a.distance == b.distance && poly_coeff_less(a.f, b.f))));
        }
    }
}

TEST_CASE("decoding is deterministic") {
    GrsSpec spec = full_grs(23, 5);
    Rng rng(9);
    std::vector<uint32_t> r = random_message(*spec.f, 23, rng);
    DecodeList a = gs_list_decode(spec, r, 9);
    DecodeList b = gs_list_decode(spec, r, 9);
    CHECK(a.params.s == b.params.s);
    CHECK(a.params.D == b.params.D);
    REQUIRE(a.candidates.size() == b.candidates.size());
    for (size_t i = 0; i < a.candidates.size(); ++i) {
        CHECK(a.candidates[i].f == b.candidates[i].f);
        CHECK(a.candidates[i].distance == b.candidates[i].distance);
    }
}

TEST_CASE("received word length is checked") {
    GrsSpec spec = full_grs(7, 2);
    CHECK_THROWS_AS(gs_list_decode(spec, {1, 2, 3}, 1), std::invalid_argument);
}

TEST_CASE("contract counters only ever count clean checks") {
    uint64_t before = interpolation_checks();
    GrsSpec spec = full_grs(7, 2);
    gs_list_decode(spec, {0, 1, 2, 3, 4, 5, 6}, 2);
    CHECK(interpolation_checks() > before);
    CHECK(interpolation_violations() == 0);
}
