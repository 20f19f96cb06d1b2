#include "twistdec/bipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace twistdec {

std::vector<std::vector<uint32_t>> pascal_mod(uint32_t p, int n) {
    std::vector<std::vector<uint32_t>> C(size_t(n) + 1);
    for (int i = 0; i <= n; ++i) {
        C[i].assign(size_t(i) + 1, 1);
        for (int j = 1; j < i; ++j) C[i][j] = (C[i - 1][j - 1] + C[i - 1][j]) % p;
    }
    return C;
}

namespace {

std::vector<uint32_t> power_ladder(const Field& F, uint32_t a, int n) {
    std::vector<uint32_t> pw(size_t(n) + 1);
    pw[0] = 1;
    for (int i = 1; i <= n; ++i) pw[i] = F.mul(pw[i - 1], a);
    return pw;
}

}

BiPoly make_bipoly(const FieldPtr& f) {
    if (!f) throw std::invalid_argument("make_bipoly: null field");
    return BiPoly{f, {}};
}

void bipoly_set(BiPoly& Q, int i, int j, uint32_t c) {
    if (i < 0 || j < 0) throw std::invalid_argument("bipoly_set: negative exponent");
    Q.f->check(c);
    if (c == 0)
        Q.terms.erase({i, j});
    else
        Q.terms[{i, j}] = c;
}

uint32_t bipoly_coeff(const BiPoly& Q, int i, int j) {
    auto it = Q.terms.find({i, j});
    return it == Q.terms.end() ? 0 : it->second;
}

uint32_t bipoly_eval(const BiPoly& Q, uint32_t x0, uint32_t y0) {
    const Field& F = *Q.f;
    F.check(x0);
    F.check(y0);
    if (Q.terms.empty()) return 0;
    int imax = 0, jmax = 0;
    for (const auto& [ij, c] : Q.terms) {
        imax = std::max(imax, ij.first);
        jmax = std::max(jmax, ij.second);
    }
    auto px = power_ladder(F, x0, imax);
    auto py = power_ladder(F, y0, jmax);
    uint32_t acc = 0;
    for (const auto& [ij, c] : Q.terms)
        acc = F.add(acc, F.mul(c, F.mul(px[ij.first], py[ij.second])));
    return acc;
}

int wdeg(const BiPoly& Q, int w) {
    if (w < 0) throw std::invalid_argument("wdeg: negative weight");
    if (Q.terms.empty()) throw std::invalid_argument("wdeg: zero polynomial");
    int d = 0;
    for (const auto& [ij, c] : Q.terms) d = std::max(d, ij.first + w * ij.second);
    return d;
}

int y_degree(const BiPoly& Q) {
    if (Q.terms.empty()) return kDegNegInf;
    int d = 0;
    for (const auto& [ij, c] : Q.terms) d = std::max(d, ij.second);
    return d;
}

BiPoly bipoly_translate(const BiPoly& Q, uint32_t a, uint32_t r) {
    const Field& F = *Q.f;
    F.check(a);
    F.check(r);
    if (Q.terms.empty() || (a == 0 && r == 0)) return Q;
    int imax = 0, jmax = 0;
    for (const auto& [ij, c] : Q.terms) {
        imax = std::max(imax, ij.first);
        jmax = std::max(jmax, ij.second);
    }
    auto C = pascal_mod(F.p(), std::max(imax, jmax));
    auto pa = power_ladder(F, a, imax);
    auto pr = power_ladder(F, r, jmax);

    std::map<std::pair<int, int>, uint32_t> acc;
    for (const auto& [ij, q] : Q.terms) {
        auto [i, j] = ij;
        for (int u = 0; u <= i; ++u) {
            if (C[i][u] == 0) continue;
            uint32_t cu = F.mul(q, F.mul(C[i][u], pa[i - u]));
            if (cu == 0) continue;
            for (int v = 0; v <= j; ++v) {
                if (C[j][v] == 0) continue;
                uint32_t t = F.mul(cu, F.mul(C[j][v], pr[j - v]));
                if (t == 0) continue;
                uint32_t& slot = acc[{u, v}];
                slot = F.add(slot, t);
            }
        }
    }
    BiPoly out = make_bipoly(Q.f);
    for (const auto& [ij, c] : acc)
        if (c) out.terms.emplace(ij, c);
    return out;
}

int multiplicity_at(const BiPoly& Q, uint32_t a, uint32_t r) {
    if (Q.terms.empty()) throw std::invalid_argument("multiplicity_at: zero polynomial");
    BiPoly T = bipoly_translate(Q, a, r);
    int m = std::numeric_limits<int>::max();
    for (const auto& [ij, c] : T.terms) m = std::min(m, ij.first + ij.second);
    return m;
}

Poly compose(const BiPoly& Q, const Poly& f) {
    require_same_field(Q.f, f.f);
    if (Q.terms.empty()) return poly_zero(f.f);
    int jmax = y_degree(Q);
    Poly res = poly_zero(f.f);
    for (int j = jmax; j >= 0; --j) {
        res = mul(res, f);
        std::vector<uint32_t> row;
        for (const auto& [ij, c] : Q.terms) {
            if (ij.second != j) continue;
            if (row.size() <= size_t(ij.first)) row.resize(size_t(ij.first) + 1, 0);
            row[size_t(ij.first)] = c;
        }
        res = add(res, make_poly(f.f, std::move(row)));
    }
    return res;
}

std::pair<int, BiPoly> strip_x(const BiPoly& Q) {
    if (Q.terms.empty()) return {0, Q};
    int m = std::numeric_limits<int>::max();
    for (const auto& [ij, c] : Q.terms) m = std::min(m, ij.first);
    if (m == 0) return {0, Q};
    BiPoly out = make_bipoly(Q.f);
    for (const auto& [ij, c] : Q.terms) out.terms.emplace(std::pair(ij.first - m, ij.second), c);
    return {m, out};
}

Poly eval_x_zero(const BiPoly& Q) {
    std::vector<uint32_t> c;
    for (const auto& [ij, q] : Q.terms) {
        if (ij.first != 0) continue;
        if (c.size() <= size_t(ij.second)) c.resize(size_t(ij.second) + 1, 0);
        c[size_t(ij.second)] = q;
    }
    return make_poly(Q.f, std::move(c));
}

BiPoly shift_x_y(const BiPoly& Q, uint32_t g) {
    const Field& F = *Q.f;
    F.check(g);
    if (Q.terms.empty()) return Q;
    int jmax = y_degree(Q);
    auto C = pascal_mod(F.p(), jmax);
    auto pg = power_ladder(F, g, jmax);

    std::map<std::pair<int, int>, uint32_t> acc;
    for (const auto& [ij, q] : Q.terms) {
        auto [i, j] = ij;
        for (int m = 0; m <= j; ++m) {
            if (C[j][m] == 0) continue;
            uint32_t t = F.mul(q, F.mul(C[j][m], pg[j - m]));
            if (t == 0) continue;
            uint32_t& slot = acc[{i + m, m}];
            slot = F.add(slot, t);
        }
    }
    BiPoly out = make_bipoly(Q.f);
    for (const auto& [ij, c] : acc)
        if (c) out.terms.emplace(ij, c);
    return out;
}

}
