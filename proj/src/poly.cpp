#include "twistdec/poly.hpp"

#include <stdexcept>

namespace twistdec {

namespace {

void normalize(std::vector<uint32_t>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// plain convolution, used directly below the Karatsuba cutoff
std::vector<uint32_t> mul_school(const Field& F, const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            if (b[j]) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

constexpr size_t kKaratsubaCutoff = 32;

std::vector<uint32_t> mul_rec(const Field& F, const std::vector<uint32_t>& a,
                              const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() < kKaratsubaCutoff || b.size() < kKaratsubaCutoff)
        return mul_school(F, a, b);

    size_t h = std::max(a.size(), b.size()) / 2;
    auto split = [h](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> lo(v.begin(), v.begin() + std::min(h, v.size()));
        std::vector<uint32_t> hi(v.size() > h ? v.begin() + h : v.end(), v.end());
        normalize(lo);
        return std::pair(std::move(lo), std::move(hi));
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);

    auto z0 = mul_rec(F, a0, b0);
    auto z2 = mul_rec(F, a1, b1);
    auto padd = [&F](std::vector<uint32_t> x, const std::vector<uint32_t>& y) {
        if (x.size() < y.size()) x.resize(y.size(), 0);
        for (size_t i = 0; i < y.size(); ++i) x[i] = F.add(x[i], y[i]);
        normalize(x);
        return x;
    };
    auto z1 = mul_rec(F, padd(a0, a1), padd(b0, b1)); // (a0+a1)(b0+b1)

    std::vector<uint32_t> out(a.size() + b.size() - 1, 0);
    auto accum = [&](const std::vector<uint32_t>& src, size_t shift, bool negate) {
        for (size_t i = 0; i < src.size(); ++i) {
            uint32_t& d = out[i + shift];
            d = negate ? F.sub(d, src[i]) : F.add(d, src[i]);
        }
    };
    accum(z0, 0, false);
    accum(z1, h, false);
    accum(z0, h, true);
    accum(z2, h, true);
    accum(z2, 2 * h, false);
    return out;
}

}

uint32_t Poly::lead() const {
    if (c.empty()) throw std::invalid_argument("lead: zero polynomial");
    return c.back();
}

Poly make_poly(const FieldPtr& f, std::vector<uint32_t> coeffs) {
    if (!f) throw std::invalid_argument("make_poly: null field");
    for (uint32_t a : coeffs) f->check(a);
    normalize(coeffs);
    return Poly{f, std::move(coeffs)};
}

Poly poly_zero(const FieldPtr& f) { return Poly{f, {}}; }

Poly poly_const(const FieldPtr& f, uint32_t a) {
    f->check(a);
    if (a == 0) return Poly{f, {}};
    return Poly{f, {a}};
}

Poly poly_x(const FieldPtr& f) { return Poly{f, {0, 1}}; }

bool operator==(const Poly& a, const Poly& b) {
    return *a.f == *b.f && a.c == b.c;
}

bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

Poly add(const Poly& a, const Poly& b) {
    require_same_field(a.f, b.f);
    std::vector<uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.f->add(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    normalize(c);
    return Poly{a.f, std::move(c)};
}

Poly sub(const Poly& a, const Poly& b) {
    require_same_field(a.f, b.f);
    std::vector<uint32_t> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = a.f->sub(i < a.c.size() ? a.c[i] : 0, i < b.c.size() ? b.c[i] : 0);
    normalize(c);
    return Poly{a.f, std::move(c)};
}

Poly mul(const Poly& a, const Poly& b) {
    require_same_field(a.f, b.f);
    if (a.c.empty() || b.c.empty()) return poly_zero(a.f);
    auto c = mul_rec(*a.f, a.c, b.c);
    normalize(c);
    return Poly{a.f, std::move(c)};
}

Poly scale(const Poly& a, uint32_t s) {
    a.f->check(s);
    if (s == 0) return poly_zero(a.f);
    std::vector<uint32_t> c(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.f->mul(a.c[i], s);
    return Poly{a.f, std::move(c)};
}

std::pair<Poly, Poly> quotrem(const Poly& a, const Poly& b) {
    require_same_field(a.f, b.f);
    if (b.is_zero()) throw std::invalid_argument("quotrem: division by zero polynomial");
    const Field& F = *a.f;
    std::vector<uint32_t> rem = a.c;
    if (a.c.size() < b.c.size()) return {poly_zero(a.f), a};
    std::vector<uint32_t> quo(a.c.size() - b.c.size() + 1, 0);
    uint32_t lead_inv = F.inv(b.c.back());
    for (size_t i = a.c.size(); i-- >= b.c.size();) {
        if (rem[i]) {
            uint32_t q = F.mul(rem[i], lead_inv);
            quo[i - b.c.size() + 1] = q;
            for (size_t j = 0; j < b.c.size(); ++j)
                rem[i - b.c.size() + 1 + j] = F.sub(rem[i - b.c.size() + 1 + j], F.mul(q, b.c[j]));
        }
        if (i == 0) break;
    }
    normalize(quo);
    normalize(rem);
    return {Poly{a.f, std::move(quo)}, Poly{a.f, std::move(rem)}};
}

uint32_t poly_eval(const Poly& f, uint32_t a) {
    f.f->check(a);
    uint32_t r = 0;
    for (size_t i = f.c.size(); i-- > 0;) r = f.f->add(f.f->mul(r, a), f.c[i]);
    return r;
}

std::vector<uint32_t> multipoint_eval(const Poly& f, const std::vector<uint32_t>& points) {
    std::vector<uint32_t> out;
    out.reserve(points.size());
    for (uint32_t a : points) out.push_back(poly_eval(f, a));
    return out;
}

Poly compose(const Poly& f, const Poly& g) {
    require_same_field(f.f, g.f);
    Poly r = poly_zero(f.f);
    for (size_t i = f.c.size(); i-- > 0;)
        r = add(mul(r, g), poly_const(f.f, f.c[i]));
    return r;
}

std::vector<uint32_t> univariate_roots(const Poly& f, uint64_t cap) {
    if (f.is_zero())
        throw std::invalid_argument("univariate_roots: zero polynomial has every root");
    if (f.f->q() > cap)
        throw std::invalid_argument("univariate_roots: field order exceeds scan cap");
    std::vector<uint32_t> roots;
    for (uint32_t a = 0; a < f.f->q(); ++a)
        if (poly_eval(f, a) == 0) roots.push_back(a);
    return roots;
}

}
