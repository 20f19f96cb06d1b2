#pragma once

#include <functional>
#include <optional>

#include "field.hpp"

namespace twistdec {

// Systematic manipulation-detection layer: k base symbols gain a random seed
// block x and a tag block t, each b base symbols wide.
struct AmdParams {
    FieldPtr base; // GF(q)
    FieldPtr ext;  // GF(q^b)
    uint32_t b = 0;
    uint32_t k = 0; // message length in base symbols
    uint32_t r = 0; // effective block count; p never divides r+2
};

AmdParams make_amd_params(FieldPtr base, uint32_t k, uint32_t b);

// t' = (x')^{r+2} + sum_{i=1}^{r} m'_{i-1} (x')^i over GF(q^b), with m packed
// blockwise (zero-padded tail) and one zero block appended when p | ceil(k/b)+2
uint32_t amd_tag(const AmdParams& params, const std::vector<uint32_t>& m, uint32_t seed);

// (m || x || t) as k + 2b base symbols, seed injected
std::vector<uint32_t> amd_encode(const AmdParams& params, const std::vector<uint32_t>& m,
                                 uint32_t seed);

// draw(bound) must return a uniform value in [0, bound)
std::vector<uint32_t> amd_encode(const AmdParams& params, const std::vector<uint32_t>& m,
                                 const std::function<uint32_t(uint32_t)>& draw);

// recomputes the tag from the candidate's own seed; the message on acceptance
std::optional<std::vector<uint32_t>> amd_verify(const AmdParams& params,
                                                const std::vector<uint32_t>& candidate);

struct AmdErrorBound {
    double exact;  // ((ceil(k/b)+2)/q^b) * (s*sqrt(n/dim) - 1)
    double coarse; // 4s / q^{b-1}
};

// n and dim are the outer decoder's length and (pseudo-)dimension
AmdErrorBound amd_error_bound(const AmdParams& params, uint32_t n, uint32_t dim, uint32_t s);

}
