#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "pipeline.hpp"

namespace twistdec {

using CodeVariant = std::variant<GrsSpec, TgrsSpec, RlSpec>;

uint32_t code_dim(const CodeVariant& code);
uint32_t code_length(const CodeVariant& code);
const FieldPtr& code_field(const CodeVariant& code);
std::vector<uint32_t> encode_any(const CodeVariant& code, const std::vector<uint32_t>& message);

// default exhaustive-enumeration budget; TWISTDEC_ENUM_CAP overrides it
uint64_t enumeration_cap();

// all q^k (message, codeword) pairs in lexicographic message order, built
// incrementally from the k basis codewords
void enumerate_codewords(
    const CodeVariant& code,
    const std::function<void(const std::vector<uint32_t>&, const std::vector<uint32_t>&)>& visit,
    std::optional<uint64_t> cap = std::nullopt);

// exact within-radius message set, ascending lexicographic
std::vector<std::vector<uint32_t>> nearest_list(const CodeVariant& code,
                                                const std::vector<uint32_t>& r, uint32_t tau,
                                                std::optional<uint64_t> cap = std::nullopt);

uint32_t min_distance(const CodeVariant& code, std::optional<uint64_t> cap = std::nullopt);

enum class CodeClass { mds, nmds, other };
CodeClass classify(const CodeVariant& code, std::optional<uint64_t> cap = std::nullopt);
const char* code_class_name(CodeClass c);

// Lagrange fit through m distinct points; degree < m
Poly lagrange_interpolate(const FieldPtr& f,
                          const std::vector<std::pair<uint32_t, uint32_t>>& points);

// mt19937_64 with rejection sampling, so sequences match across platforms
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, m)
    uint64_t below(uint64_t m);

private:
    std::mt19937_64 gen_;
};

std::vector<uint32_t> random_message(const Field& f, size_t len, Rng& rng);

// uniform support of the given weight, uniform nonzero values on it
std::vector<uint32_t> random_error(const Field& f, uint32_t n, uint32_t weight, Rng& rng);

struct TrialConfig {
    std::variant<CodeVariant, AmdCodec> subject;
    std::vector<uint32_t> weights;
    uint32_t trials_per_weight = 0;
    uint64_t master_seed = 0;
    uint32_t tau = 0;
    bool timing = false; // real wall-clock in the CSV instead of 0.000
};

struct TrialStats {
    uint32_t weight = 0;
    uint32_t trials = 0;
    uint32_t successes = 0;
    uint32_t failures = 0;  // empty list, wrong message, or infeasible radius
    uint32_t ambiguous = 0;
    double mean_list = 0.0;
    uint32_t max_list = 0;
    uint32_t amd_false_accepts = 0; // trials where a wrong candidate passed
    double seconds = 0.0;
};

// trial t of weight index w uses seed master ^ (w * trials_per_weight + t)
std::vector<TrialStats> run_trials(const TrialConfig& config);

std::string trials_csv(const std::vector<TrialStats>& stats, bool timing);
void write_trials_csv(const std::string& path, const std::vector<TrialStats>& stats, bool timing);

}
