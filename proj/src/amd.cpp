#include "twistdec/amd.hpp"

#include <cmath>
#include <stdexcept>

namespace twistdec {

AmdParams make_amd_params(FieldPtr base, uint32_t k, uint32_t b) {
    if (!base) throw std::invalid_argument("make_amd_params: null field");
    if (k < 1) throw std::invalid_argument("make_amd_params: need k >= 1");
    if (b < 1) throw std::invalid_argument("make_amd_params: need b >= 1");
    FieldPtr ext = Field::make(base->p(), base->e() * b);
    uint32_t r0 = (k + b - 1) / b;
    uint32_t p = base->p();
    // the tag polynomial must keep degree exactly r+2 under differencing
    uint32_t r = ((r0 + 2) % p == 0) ? r0 + 1 : r0;
    if ((r + 2) % p == 0)
        throw std::logic_error("make_amd_params: divisibility fix failed"); // cannot happen
    return AmdParams{std::move(base), std::move(ext), b, k, r};
}

namespace {

// m split into ceil(k/b) blocks of b base symbols, zero-padded, each packed
// into GF(q^b); blocks beyond that (up to r) read as zero
std::vector<uint32_t> packed_blocks(const AmdParams& P, const std::vector<uint32_t>& m) {
    if (m.size() != P.k)
        throw std::invalid_argument("amd: expected exactly k message symbols");
    uint32_t r0 = (P.k + P.b - 1) / P.b;
    std::vector<uint32_t> blocks(P.r, 0);
    for (uint32_t i = 0; i < r0; ++i) {
        std::vector<uint32_t> blk(P.b, 0);
        for (uint32_t j = 0; j < P.b && i * P.b + j < P.k; ++j) blk[j] = m[i * P.b + j];
        blocks[i] = pack_block(*P.base, *P.ext, blk);
    }
    return blocks;
}

}

uint32_t amd_tag(const AmdParams& P, const std::vector<uint32_t>& m, uint32_t seed) {
    const Field& E = *P.ext;
    E.check(seed);
    std::vector<uint32_t> blocks = packed_blocks(P, m);
    // Horner over x'^{r+2} + m'_{r-1} x'^r + ... + m'_0 x'; the zero constant
    // term folds into the final multiplication
    uint32_t acc = E.mul(seed, seed);
    for (uint32_t i = P.r; i >= 1; --i) {
        acc = E.add(acc, blocks[i - 1]);
        acc = E.mul(acc, seed);
    }
    return acc;
}

std::vector<uint32_t> amd_encode(const AmdParams& P, const std::vector<uint32_t>& m,
                                 uint32_t seed) {
    uint32_t tag = amd_tag(P, m, seed);
    std::vector<uint32_t> out = m;
    out.reserve(P.k + 2 * P.b);
    std::vector<uint32_t> xs = unpack_block(*P.base, *P.ext, seed);
    std::vector<uint32_t> ts = unpack_block(*P.base, *P.ext, tag);
    out.insert(out.end(), xs.begin(), xs.end());
    out.insert(out.end(), ts.begin(), ts.end());
    return out;
}

std::vector<uint32_t> amd_encode(const AmdParams& P, const std::vector<uint32_t>& m,
                                 const std::function<uint32_t(uint32_t)>& draw) {
    return amd_encode(P, m, draw(P.ext->q()));
}

std::optional<std::vector<uint32_t>> amd_verify(const AmdParams& P,
                                                const std::vector<uint32_t>& candidate) {
    if (candidate.size() != P.k + 2 * P.b)
        throw std::invalid_argument("amd_verify: expected k + 2b symbols");
    for (uint32_t a : candidate) P.base->check(a);
    std::vector<uint32_t> m(candidate.begin(), candidate.begin() + P.k);
    std::vector<uint32_t> xs(candidate.begin() + P.k, candidate.begin() + P.k + P.b);
    std::vector<uint32_t> ts(candidate.begin() + P.k + P.b, candidate.end());
    uint32_t seed = pack_block(*P.base, *P.ext, xs);
    uint32_t tag = pack_block(*P.base, *P.ext, ts);
    if (amd_tag(P, m, seed) != tag) return std::nullopt;
    return m;
}

AmdErrorBound amd_error_bound(const AmdParams& P, uint32_t n, uint32_t dim, uint32_t s) {
    if (n < 1 || dim < 1 || dim > n || s < 1)
        throw std::invalid_argument("amd_error_bound: need 1 <= dim <= n and s >= 1");
    double qb = double(P.ext->q());
    double r0 = double((P.k + P.b - 1) / P.b);
    double list_cap = double(s) * std::sqrt(double(n) / double(dim));
    AmdErrorBound B;
    B.exact = ((r0 + 2.0) / qb) * (list_cap - 1.0);
    B.coarse = 4.0 * double(s) / std::pow(double(P.base->q()), double(P.b) - 1.0);
    return B;
}

}
