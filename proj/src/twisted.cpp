#include "twistdec/twisted.hpp"

#include <algorithm>
#include <set>

namespace twistdec {

TgrsSpec make_tgrs_spec(GrsSpec base, std::vector<TwistTriple> twists) {
    // revalidate the base pieces; the fields are public and may have been edited
    GrsSpec checked = make_grs_spec(base.f, base.alphas, base.vs, base.k);
    uint32_t n = checked.n(), k = checked.k;
    if (twists.empty())
        throw std::invalid_argument("make_tgrs_spec: need at least one twist");
    std::set<std::pair<uint32_t, uint32_t>> seen;
    uint32_t max_t = 0;
    for (const TwistTriple& tw : twists) {
        if (tw.t < 1 || tw.t > n - k)
            throw std::invalid_argument("make_tgrs_spec: twist hook t out of [1, n-k]");
        if (tw.h >= k)
            throw std::invalid_argument("make_tgrs_spec: twist position h out of [0, k)");
        checked.f->check(tw.eta);
        if (tw.eta == 0)
            throw std::invalid_argument("make_tgrs_spec: twist coefficient eta must be nonzero");
        if (!seen.insert({tw.t, tw.h}).second)
            throw std::invalid_argument("make_tgrs_spec: duplicate (t, h) pair");
        max_t = std::max(max_t, tw.t);
    }
    if (uint64_t(twists.size()) > uint64_t(k) * max_t)
        throw std::invalid_argument("make_tgrs_spec: more twists than the k*(k'-k) cap");
    return TgrsSpec{std::move(checked), std::move(twists)};
}

uint32_t pseudo_dimension(const TgrsSpec& spec) {
    uint32_t max_t = 0;
    for (const TwistTriple& tw : spec.twists) max_t = std::max(max_t, tw.t);
    return spec.base.k + max_t;
}

uint32_t max_twist_excess(uint32_t n, uint32_t k) {
    if (k >= n) return 0;
    uint64_t num = uint64_t(n - k) * (n - k);
    uint64_t ceil_div = (num + 4 * uint64_t(n) - 1) / (4 * uint64_t(n));
    return ceil_div == 0 ? 0 : uint32_t(ceil_div - 1);
}

uint32_t max_twists(uint32_t n, uint32_t k, uint32_t k_prime_excess) {
    if (k < 1 || k > n) throw std::invalid_argument("max_twists: need 1 <= k <= n");
    if (k_prime_excess > n - k)
        throw std::invalid_argument("max_twists: excess exceeds n - k");
    return k * k_prime_excess;
}

Poly twist_poly(const TgrsSpec& spec, const std::vector<uint32_t>& message) {
    uint32_t k = spec.base.k;
    if (message.size() != k)
        throw std::invalid_argument("twist_poly: expected exactly k message coefficients");
    const Field& F = *spec.base.f;
    std::vector<uint32_t> c(pseudo_dimension(spec), 0);
    for (uint32_t i = 0; i < k; ++i) {
        F.check(message[i]);
        c[i] = message[i];
    }
    // contributions to a shared exponent accumulate; cancellation is legitimate
    for (const TwistTriple& tw : spec.twists) {
        uint32_t idx = k - 1 + tw.t;
        c[idx] = F.add(c[idx], F.mul(tw.eta, message[tw.h]));
    }
    return make_poly(spec.base.f, std::move(c));
}

std::vector<uint32_t> tgrs_encode(const TgrsSpec& spec, const std::vector<uint32_t>& message) {
    Poly f = twist_poly(spec, message);
    std::vector<uint32_t> out(spec.base.n());
    for (size_t i = 0; i < out.size(); ++i)
        out[i] = spec.base.f->mul(spec.base.vs[i], poly_eval(f, spec.base.alphas[i]));
    return out;
}

bool is_twist_polynomial(const TgrsSpec& spec, const Poly& f) {
    require_same_field(spec.base.f, f.f);
    uint32_t kp = pseudo_dimension(spec);
    if (f.degree() >= int(kp))
        throw std::invalid_argument("is_twist_polynomial: degree too large, at or above the pseudo-dimension");
    std::vector<uint32_t> low(spec.base.k);
    for (uint32_t i = 0; i < spec.base.k; ++i) low[i] = f.coeff(i);
    return twist_poly(spec, low) == f;
}

GrsSpec super_code(const TgrsSpec& spec) {
    return make_grs_spec(spec.base.f, spec.base.alphas, spec.base.vs, pseudo_dimension(spec));
}

TgrsDecodeList tgrs_list_decode(const TgrsSpec& spec, const std::vector<uint32_t>& r,
                                uint32_t tau, uint32_t s_max) {
    DecodeList inner = gs_list_decode(super_code(spec), r, tau, s_max);
    TgrsDecodeList out;
    out.params = std::move(inner.params);
    for (Candidate& c : inner.candidates) {
        if (!is_twist_polynomial(spec, c.f)) continue;
        std::vector<uint32_t> msg(spec.base.k);
        for (uint32_t i = 0; i < spec.base.k; ++i) msg[i] = c.f.coeff(i);
        out.candidates.push_back({std::move(msg), std::move(c.f), c.distance});
    }
    // inner order is (distance, coefficient lex); twist exponents sit at or
    // above k, so coefficient lex coincides with message lex and the order holds
    return out;
}

UniqueResult tgrs_unique_decode(const TgrsSpec& spec, const std::vector<uint32_t>& r,
                                uint32_t s_max) {
    uint32_t n = spec.base.n(), k = spec.base.k;
    uint32_t kp = pseudo_dimension(spec);
    if (4 * uint64_t(n) * kp >= uint64_t(n + k) * (n + k)) {
        uint32_t best = max_feasible_radius(n, kp, s_max);
        throw InfeasibleRadius(
            "unique decoding needs 4nk' < (n+k)^2, but pseudo-dimension " + std::to_string(kp) +
                " is too large for n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                "; largest list-decodable radius is " + std::to_string(best),
            best);
    }
    uint32_t tau = (n - k) / 2;
    TgrsDecodeList L = tgrs_list_decode(spec, r, tau, s_max);
    UniqueResult R;
    R.tau = tau;
    R.list_size = L.candidates.size();
    if (L.candidates.empty())
        R.status = UniqueStatus::no_codeword;
    else if (L.candidates.size() > 1)
        R.status = UniqueStatus::not_unique;
    else {
        R.status = UniqueStatus::decoded;
        R.message = L.candidates.front().message;
    }
    return R;
}

}
