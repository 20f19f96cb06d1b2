#pragma once

#include "gs.hpp"

namespace twistdec {

// length n, but only n-1 evaluation points: the last coordinate reads
// v_n * (m_{k-2} + delta * m_{k-1}) off the generator matrix's final column
struct RlSpec {
    FieldPtr f;
    std::vector<uint32_t> alphas; // n-1 distinct points
    std::vector<uint32_t> vs;     // n nonzero multipliers
    uint32_t k = 0;               // k >= 3, k+3 <= n <= q+1
    uint32_t delta = 0;

    uint32_t n() const { return uint32_t(vs.size()); }
};

RlSpec make_rl_spec(FieldPtr f, std::vector<uint32_t> alphas, std::vector<uint32_t> vs,
                    uint32_t k, uint32_t delta);

std::vector<uint32_t> rl_encode(const RlSpec& spec, const std::vector<uint32_t>& message);

// dropping the last coordinate lands in GRS(alphas, vs*, k)
GrsSpec puncture_spec(const RlSpec& spec);
std::vector<uint32_t> puncture_word(const std::vector<uint32_t>& w);

struct RlCandidate {
    std::vector<uint32_t> message;
    uint32_t distance; // against the full n-symbol received word
};

struct RlDecodeList {
    GsParams params; // of the punctured decode
    std::vector<RlCandidate> candidates; // ascending (distance, message)
};

RlDecodeList rl_list_decode(const RlSpec& spec, const std::vector<uint32_t>& r, uint32_t tau,
                            uint32_t s_max = kDefaultMultiplicityCap);

// radius floor((n-k)/2); requires sqrt(n-1) - sqrt(k) > 1
UniqueResult rl_unique_decode(const RlSpec& spec, const std::vector<uint32_t>& r,
                              uint32_t s_max = kDefaultMultiplicityCap);

}
