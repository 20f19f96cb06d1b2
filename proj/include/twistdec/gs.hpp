#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bipoly.hpp"

namespace twistdec {

// Evaluation code: codeword_i = v_i * f(alpha_i) for deg f < k.
struct GrsSpec {
    FieldPtr f;
    std::vector<uint32_t> alphas; // pairwise distinct
    std::vector<uint32_t> vs;     // all nonzero, same length
    uint32_t k = 0;               // 1 <= k <= n <= q

    uint32_t n() const { return uint32_t(alphas.size()); }
};

GrsSpec make_grs_spec(FieldPtr f, std::vector<uint32_t> alphas, std::vector<uint32_t> vs,
                      uint32_t k);

std::vector<uint32_t> grs_encode(const GrsSpec& spec, const std::vector<uint32_t>& coeffs);

// Decoding radius beyond what any multiplicity up to the cap supports.
class InfeasibleRadius : public std::invalid_argument {
public:
    InfeasibleRadius(const std::string& msg, uint32_t max_tau)
        : std::invalid_argument(msg), max_feasible_tau(max_tau) {}

    uint32_t max_feasible_tau;
};

struct GsParams {
    uint32_t n = 0, k = 0, tau = 0, s = 0;
    int D = 0;                                // = s * (n - tau)
    std::vector<std::pair<int, int>> monomials; // (i, j) with i + (k-1)j < D
};

inline constexpr uint32_t kDefaultMultiplicityCap = 64;

// Smallest s whose monomial count strictly exceeds the n*s(s+1)/2 Hasse
// constraints; radii at or beyond n - sqrt(nk) are refused outright (for
// tau >= 1) since no multiplicity can certify them.
uint32_t select_multiplicity(uint32_t n, uint32_t k, uint32_t tau,
                             uint32_t s_max = kDefaultMultiplicityCap);

// largest radius select_multiplicity accepts for (n, k)
uint32_t max_feasible_radius(uint32_t n, uint32_t k,
                             uint32_t s_max = kDefaultMultiplicityCap);

GsParams make_gs_params(uint32_t n, uint32_t k, uint32_t tau,
                        uint32_t s_max = kDefaultMultiplicityCap);

// Nonzero Q with multiplicity >= s at every (x_i, y_i) and wdeg_{1,k-1}(Q) < D.
BiPoly interpolate(const FieldPtr& f,
                   const std::vector<std::pair<uint32_t, uint32_t>>& points,
                   const GsParams& params);

// All f with deg f < k and Q(x, f(x)) = 0, in ascending coefficient order.
std::vector<Poly> rr_roots(const BiPoly& Q, uint32_t k);

struct Candidate {
    Poly f;
    uint32_t distance;
};

struct DecodeList {
    GsParams params;
    std::vector<Candidate> candidates; // ascending (distance, coefficients)
};

// ascending-exponent coefficient comparison, absent coefficients read as zero
bool poly_coeff_less(const Poly& a, const Poly& b);

DecodeList gs_list_decode(const GrsSpec& spec, const std::vector<uint32_t>& r, uint32_t tau,
                          uint32_t s_max = kDefaultMultiplicityCap);

// outcome of a half-minimum-distance decode; not_unique doubles as evidence
// that the code is not MDS, which the radius theorems otherwise preclude
enum class UniqueStatus { decoded, no_codeword, not_unique };

struct UniqueResult {
    UniqueStatus status = UniqueStatus::no_codeword;
    std::vector<uint32_t> message; // set only when status == decoded
    uint32_t tau = 0;              // radius the decode ran at
    size_t list_size = 0;
};

// Running totals of the always-on interpolation contract checks; a violation
// additionally aborts the decode with std::logic_error.
uint64_t interpolation_checks();
uint64_t interpolation_violations();

}
