#pragma once

#include "gs.hpp"

namespace twistdec {

// one twist: coefficient h of the message feeds exponent k-1+t with weight eta
struct TwistTriple {
    uint32_t t = 0;   // 1 <= t <= n-k
    uint32_t h = 0;   // 0 <= h < k
    uint32_t eta = 0; // nonzero
};

struct TgrsSpec {
    GrsSpec base; // dimension k, the message space
    std::vector<TwistTriple> twists;
};

TgrsSpec make_tgrs_spec(GrsSpec base, std::vector<TwistTriple> twists);

// k + max t; every twist polynomial has degree below this
uint32_t pseudo_dimension(const TgrsSpec& spec);

// ceil((n-k)^2 / 4n) - 1, the largest pseudo-dimension excess for which the
// half-distance radius stays reachable
uint32_t max_twist_excess(uint32_t n, uint32_t k);

// k * excess, the combinatorial cap on the twist count
uint32_t max_twists(uint32_t n, uint32_t k, uint32_t k_prime_excess);

Poly twist_poly(const TgrsSpec& spec, const std::vector<uint32_t>& message);
std::vector<uint32_t> tgrs_encode(const TgrsSpec& spec, const std::vector<uint32_t>& message);

// membership by reconstruction from the low k coefficients; requires deg f < k'
bool is_twist_polynomial(const TgrsSpec& spec, const Poly& f);

// the dimension-k' GRS code every TGRS codeword lies in
GrsSpec super_code(const TgrsSpec& spec);

struct TgrsCandidate {
    std::vector<uint32_t> message; // k low coefficients
    Poly f;                        // full twist polynomial
    uint32_t distance;
};

struct TgrsDecodeList {
    GsParams params;
    std::vector<TgrsCandidate> candidates; // ascending (distance, message)
};

TgrsDecodeList tgrs_list_decode(const TgrsSpec& spec, const std::vector<uint32_t>& r,
                                uint32_t tau, uint32_t s_max = kDefaultMultiplicityCap);

// radius floor((n-k)/2); requires 4nk' < (n+k)^2
UniqueResult tgrs_unique_decode(const TgrsSpec& spec, const std::vector<uint32_t>& r,
                                uint32_t s_max = kDefaultMultiplicityCap);

}
