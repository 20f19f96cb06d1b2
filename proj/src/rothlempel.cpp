#include "twistdec/rothlempel.hpp"

#include <algorithm>
#include <set>

namespace twistdec {

RlSpec make_rl_spec(FieldPtr f, std::vector<uint32_t> alphas, std::vector<uint32_t> vs,
                    uint32_t k, uint32_t delta) {
    if (!f) throw std::invalid_argument("make_rl_spec: null field");
    uint32_t n = uint32_t(vs.size());
    if (alphas.size() + 1 != vs.size())
        throw std::invalid_argument("make_rl_spec: need exactly n-1 evaluation points");
    if (k < 3) throw std::invalid_argument("make_rl_spec: need k >= 3");
    if (n < k + 3 || n > f->q() + 1)
        throw std::invalid_argument("make_rl_spec: need k+3 <= n <= q+1");
    std::set<uint32_t> seen;
    for (uint32_t a : alphas) {
        f->check(a);
        if (!seen.insert(a).second)
            throw std::invalid_argument("make_rl_spec: evaluation points must be distinct");
    }
    for (uint32_t v : vs) {
        f->check(v);
        if (v == 0) throw std::invalid_argument("make_rl_spec: column multipliers must be nonzero");
    }
    f->check(delta);
    return RlSpec{std::move(f), std::move(alphas), std::move(vs), k, delta};
}

std::vector<uint32_t> rl_encode(const RlSpec& spec, const std::vector<uint32_t>& message) {
    if (message.size() != spec.k)
        throw std::invalid_argument("rl_encode: expected exactly k coefficients");
    const Field& F = *spec.f;
    Poly f = make_poly(spec.f, message);
    uint32_t n = spec.n();
    std::vector<uint32_t> out(n);
    for (uint32_t j = 0; j + 1 < n; ++j)
        out[j] = F.mul(spec.vs[j], poly_eval(f, spec.alphas[j]));
    uint32_t last = F.add(message[spec.k - 2], F.mul(spec.delta, message[spec.k - 1]));
    out[n - 1] = F.mul(spec.vs[n - 1], last);
    return out;
}

GrsSpec puncture_spec(const RlSpec& spec) {
    std::vector<uint32_t> vs(spec.vs.begin(), spec.vs.end() - 1);
    return make_grs_spec(spec.f, spec.alphas, std::move(vs), spec.k);
}

std::vector<uint32_t> puncture_word(const std::vector<uint32_t>& w) {
    if (w.empty()) throw std::invalid_argument("puncture_word: empty word");
    return std::vector<uint32_t>(w.begin(), w.end() - 1);
}

RlDecodeList rl_list_decode(const RlSpec& spec, const std::vector<uint32_t>& r, uint32_t tau,
                            uint32_t s_max) {
    if (r.size() != spec.n())
        throw std::invalid_argument("rl_list_decode: received word length mismatch");
    for (uint32_t x : r) spec.f->check(x);
    if (tau >= spec.n())
        throw std::invalid_argument("rl_list_decode: need tau < n");

    DecodeList inner = gs_list_decode(puncture_spec(spec), puncture_word(r), tau, s_max);
    RlDecodeList out;
    out.params = std::move(inner.params);
    for (const Candidate& c : inner.candidates) {
        std::vector<uint32_t> msg = c.f.c;
        msg.resize(spec.k, 0);
        std::vector<uint32_t> cw = rl_encode(spec, msg);
        uint32_t dist = 0;
        for (size_t i = 0; i < cw.size(); ++i)
            if (cw[i] != r[i]) ++dist;
        if (dist <= tau) out.candidates.push_back({std::move(msg), dist});
    }
    // re-filtering against the full word can reorder distances
    std::sort(out.candidates.begin(), out.candidates.end(),
              [](const RlCandidate& a, const RlCandidate& b) {
                  if (a.distance != b.distance) return a.distance < b.distance;
                  return a.message < b.message;
              });
    return out;
}

UniqueResult rl_unique_decode(const RlSpec& spec, const std::vector<uint32_t>& r,
                              uint32_t s_max) {
    uint32_t n = spec.n(), k = spec.k;
    // sqrt(n-1) - sqrt(k) > 1 in exact integer form
    bool ok = n >= k + 3 && uint64_t(n - k - 2) * (n - k - 2) > 4 * uint64_t(k);
    if (!ok) {
        uint32_t best = max_feasible_radius(n - 1, k, s_max);
        throw InfeasibleRadius("unique decoding needs sqrt(n-1) - sqrt(k) > 1, which fails for n = " +
                                   std::to_string(n) + ", k = " + std::to_string(k) +
                                   "; largest list-decodable radius is " + std::to_string(best),
                               best);
    }
    uint32_t tau = (n - k) / 2;
    RlDecodeList L = rl_list_decode(spec, r, tau, s_max);
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
