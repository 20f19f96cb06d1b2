#include "twistdec/gs.hpp"

#include <algorithm>
#include <atomic>
#include <set>

namespace twistdec {

namespace {

// lattice points (i, j >= 0) with i + w*j < D; for w = 0 the j range is
// clipped to just past the solvability threshold, otherwise it is unbounded
uint64_t monomial_count(int w, int D, uint64_t needed) {
    if (D <= 0) return 0;
    if (w == 0) {
        uint64_t jmax = needed / uint64_t(D) + 1;
        return uint64_t(D) * (jmax + 1);
    }
    uint64_t total = 0;
    for (int j = 0; w * j < D; ++j) total += uint64_t(D - w * j);
    return total;
}

// tau >= n - sqrt(nk) admits no multiplicity at all; tau = 0 is always fine
bool radius_gate(uint32_t n, uint32_t k, uint32_t tau) {
    if (tau == 0) return true;
    return uint64_t(n - tau) * (n - tau) > uint64_t(n) * k;
}

// 0 when infeasible within s_max
uint32_t find_multiplicity(uint32_t n, uint32_t k, uint32_t tau, uint32_t s_max) {
    if (!radius_gate(n, k, tau)) return 0;
    for (uint32_t s = 1; s <= s_max; ++s) {
        uint64_t needed = uint64_t(n) * s * (s + 1) / 2;
        int D = int(s) * int(n - tau);
        if (monomial_count(int(k) - 1, D, needed) > needed) return s;
    }
    return 0;
}

uint32_t hamming(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    uint32_t d = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

std::atomic<uint64_t> g_checks{0};
std::atomic<uint64_t> g_violations{0};

void contract(bool ok, const char* what) {
    ++g_checks;
    if (!ok) {
        ++g_violations;
        throw std::logic_error(std::string("interpolation contract violated: ") + what);
    }
}

void rr_descend(const BiPoly& Q, uint32_t k, std::vector<uint32_t>& prefix,
                std::vector<std::vector<uint32_t>>& out) {
    BiPoly S = strip_x(Q).second;
    Poly q0 = eval_x_zero(S);
    for (uint32_t g : univariate_roots(q0)) {
        prefix.push_back(g);
        if (prefix.size() == k)
            out.push_back(prefix);
        else
            rr_descend(shift_x_y(S, g), k, prefix, out);
        prefix.pop_back();
    }
}

}

GrsSpec make_grs_spec(FieldPtr f, std::vector<uint32_t> alphas, std::vector<uint32_t> vs,
                      uint32_t k) {
    if (!f) throw std::invalid_argument("make_grs_spec: null field");
    uint32_t n = uint32_t(alphas.size());
    if (n == 0 || n > f->q())
        throw std::invalid_argument("make_grs_spec: need 1 <= n <= q");
    if (vs.size() != alphas.size())
        throw std::invalid_argument("make_grs_spec: alphas and vs differ in length");
    if (k < 1 || k > n)
        throw std::invalid_argument("make_grs_spec: need 1 <= k <= n");
    std::set<uint32_t> seen;
    for (uint32_t a : alphas) {
        f->check(a);
        if (!seen.insert(a).second)
            throw std::invalid_argument("make_grs_spec: evaluation points must be distinct");
    }
    for (uint32_t v : vs) {
        f->check(v);
        if (v == 0) throw std::invalid_argument("make_grs_spec: column multipliers must be nonzero");
    }
    return GrsSpec{std::move(f), std::move(alphas), std::move(vs), k};
}

std::vector<uint32_t> grs_encode(const GrsSpec& spec, const std::vector<uint32_t>& coeffs) {
    if (coeffs.size() != spec.k)
        throw std::invalid_argument("grs_encode: expected exactly k coefficients");
    Poly f = make_poly(spec.f, coeffs);
    std::vector<uint32_t> out(spec.n());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = spec.f->mul(spec.vs[i], poly_eval(f, spec.alphas[i]));
    return out;
}

uint32_t max_feasible_radius(uint32_t n, uint32_t k, uint32_t s_max) {
    for (uint32_t tau = n - 1;; --tau) {
        if (find_multiplicity(n, k, tau, s_max)) return tau;
        if (tau == 0) return 0;
    }
}

uint32_t select_multiplicity(uint32_t n, uint32_t k, uint32_t tau, uint32_t s_max) {
    if (k < 1 || k > n) throw std::invalid_argument("select_multiplicity: need 1 <= k <= n");
    if (tau >= n) throw std::invalid_argument("select_multiplicity: need tau < n");
    if (s_max < 1) throw std::invalid_argument("select_multiplicity: need s_max >= 1");
    uint32_t s = find_multiplicity(n, k, tau, s_max);
    if (s == 0) {
        uint32_t best = max_feasible_radius(n, k, s_max);
        throw InfeasibleRadius("radius " + std::to_string(tau) + " is out of reach for n = " +
                                   std::to_string(n) + ", k = " + std::to_string(k) +
                                   "; the largest feasible radius is " + std::to_string(best),
                               best);
    }
    return s;
}

GsParams make_gs_params(uint32_t n, uint32_t k, uint32_t tau, uint32_t s_max) {
    GsParams P;
    P.n = n;
    P.k = k;
    P.tau = tau;
    P.s = select_multiplicity(n, k, tau, s_max);
    P.D = int(P.s) * int(n - tau);
    int w = int(k) - 1;
    if (w == 0) {
        uint64_t needed = uint64_t(n) * P.s * (P.s + 1) / 2;
        uint64_t jmax = needed / uint64_t(P.D) + 1;
        for (uint64_t j = 0; j <= jmax; ++j)
            for (int i = 0; i < P.D; ++i)
                P.monomials.emplace_back(i, int(j));
    } else {
        for (int j = 0; w * j < P.D; ++j)
            for (int i = 0; i + w * j < P.D; ++i)
                P.monomials.emplace_back(i, j);
    }
    return P;
}

BiPoly interpolate(const FieldPtr& fp,
                   const std::vector<std::pair<uint32_t, uint32_t>>& points,
                   const GsParams& P) {
    if (!fp) throw std::invalid_argument("interpolate: null field");
    const Field& F = *fp;
    if (points.size() != P.n)
        throw std::invalid_argument("interpolate: point count does not match params");
    {
        std::set<uint32_t> xs;
        for (const auto& [x, y] : points) {
            F.check(x);
            F.check(y);
            if (!xs.insert(x).second)
                throw std::invalid_argument("interpolate: repeated x coordinate");
        }
    }

    const size_t cols = P.monomials.size();
    const size_t per_point = size_t(P.s) * (P.s + 1) / 2;
    const size_t rows = points.size() * per_point;
    // params construction guarantees strictly more unknowns than equations
    int emax = 0;
    for (const auto& [i, j] : P.monomials) emax = std::max({emax, i, j});
    auto C = pascal_mod(F.p(), emax);

    std::vector<std::vector<uint32_t>> M(rows, std::vector<uint32_t>(cols, 0));
    std::vector<uint32_t> px(size_t(emax) + 1), py(size_t(emax) + 1);
    for (size_t t = 0; t < points.size(); ++t) {
        auto [x, y] = points[t];
        px[0] = py[0] = 1;
        for (int i = 1; i <= emax; ++i) {
            px[i] = F.mul(px[i - 1], x);
            py[i] = F.mul(py[i - 1], y);
        }
        // Hasse constraints of order (a, b), a + b < s, in total-order-major order
        for (uint32_t o = 0; o < P.s; ++o) {
            for (uint32_t a = 0; a <= o; ++a) {
                uint32_t b = o - a;
                auto& row = M[t * per_point + size_t(o) * (o + 1) / 2 + a];
                for (size_t c = 0; c < cols; ++c) {
                    auto [i, j] = P.monomials[c];
                    if (i < int(a) || j < int(b)) continue;
                    uint32_t coef = F.mul(C[i][a], C[j][b]);
                    if (!coef) continue;
                    row[c] = F.mul(coef, F.mul(px[i - a], py[j - b]));
                }
            }
        }
    }

    // Gauss-Jordan, columns left to right, first nonzero row as pivot
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t sel = rank;
        while (sel < rows && M[sel][col] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(M[rank], M[sel]);
        uint32_t inv = F.inv(M[rank][col]);
        for (size_t c = col; c < cols; ++c) M[rank][c] = F.mul(M[rank][c], inv);
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            uint32_t factor = M[r][col];
            if (!factor) continue;
            for (size_t c = col; c < cols; ++c)
                M[r][c] = F.sub(M[r][c], F.mul(factor, M[rank][c]));
        }
        pivot_col.push_back(col);
        ++rank;
    }

    // lowest-index free variable set to one, all other free variables zero
    std::vector<char> is_pivot(cols, 0);
    for (size_t c : pivot_col) is_pivot[c] = 1;
    size_t free_col = cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    if (free_col == cols)
        throw std::logic_error("interpolate: no free column in an underdetermined system");

    std::vector<uint32_t> sol(cols, 0);
    sol[free_col] = 1;
    for (size_t r = 0; r < rank; ++r) sol[pivot_col[r]] = F.neg(M[r][free_col]);

    BiPoly Q = make_bipoly(fp);
    for (size_t c = 0; c < cols; ++c)
        if (sol[c]) Q.terms.emplace(P.monomials[c], sol[c]);
    return Q;
}

std::vector<Poly> rr_roots(const BiPoly& Q, uint32_t k) {
    if (Q.terms.empty()) throw std::invalid_argument("rr_roots: zero polynomial");
    if (k < 1) throw std::invalid_argument("rr_roots: degree bound must be positive");
    std::vector<std::vector<uint32_t>> raw;
    std::vector<uint32_t> prefix;
    rr_descend(Q, k, prefix, raw);

    std::set<std::vector<uint32_t>> seen;
    std::vector<Poly> out;
    for (auto& cv : raw) {
        if (!seen.insert(cv).second) continue;
        Poly f = make_poly(Q.f, cv);
        if (compose(Q, f).is_zero()) out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), poly_coeff_less);
    return out;
}

bool poly_coeff_less(const Poly& a, const Poly& b) {
    size_t m = std::max(a.c.size(), b.c.size());
    for (size_t i = 0; i < m; ++i) {
        uint32_t ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return ca < cb;
    }
    return false;
}

DecodeList gs_list_decode(const GrsSpec& spec, const std::vector<uint32_t>& r, uint32_t tau,
                          uint32_t s_max) {
    if (r.size() != spec.n())
        throw std::invalid_argument("gs_list_decode: received word length mismatch");
    for (uint32_t x : r) spec.f->check(x);

    GsParams P = make_gs_params(spec.n(), spec.k, tau, s_max);
    std::vector<std::pair<uint32_t, uint32_t>> pts(r.size());
    for (size_t i = 0; i < r.size(); ++i)
        pts[i] = {spec.alphas[i], spec.f->mul(r[i], spec.f->inv(spec.vs[i]))};

    BiPoly Q = interpolate(spec.f, pts, P);
    contract(!Q.terms.empty(), "zero interpolation polynomial");
    contract(wdeg(Q, int(spec.k) - 1) < P.D, "weighted degree at or above the budget");
    for (const auto& [x, y] : pts)
        contract(multiplicity_at(Q, x, y) >= int(P.s), "point multiplicity below s");

    DecodeList L;
    L.params = std::move(P);
    for (Poly& f : rr_roots(Q, spec.k)) {
        std::vector<uint32_t> coeffs = f.c;
        coeffs.resize(spec.k, 0);
        uint32_t dist = hamming(grs_encode(spec, coeffs), r);
        if (dist <= tau) L.candidates.push_back({std::move(f), dist});
    }
    std::sort(L.candidates.begin(), L.candidates.end(), [](const Candidate& a, const Candidate& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        return poly_coeff_less(a.f, b.f);
    });
    return L;
}

uint64_t interpolation_checks() { return g_checks.load(); }
uint64_t interpolation_violations() { return g_violations.load(); }

}
