#pragma once

#include <variant>

#include "amd.hpp"
#include "rothlempel.hpp"
#include "twisted.hpp"

namespace twistdec {

using OuterSpec = std::variant<TgrsSpec, RlSpec>;

// outer code of dimension k + 2b carrying AMD-augmented messages of length k
struct AmdCodec {
    OuterSpec outer;
    AmdParams amd;
};

AmdCodec make_amd_codec(OuterSpec outer, uint32_t b);

uint32_t codec_n(const AmdCodec& codec);
uint32_t codec_dim(const AmdCodec& codec);      // k + 2b
uint32_t codec_message_len(const AmdCodec& codec); // k
const FieldPtr& codec_field(const AmdCodec& codec);

std::vector<uint32_t> amd_assisted_encode(const AmdCodec& codec, const std::vector<uint32_t>& m,
                                          uint32_t seed);
std::vector<uint32_t> amd_assisted_encode(const AmdCodec& codec, const std::vector<uint32_t>& m,
                                          const std::function<uint32_t(uint32_t)>& draw);

enum class PipelineStatus { decoded, empty, ambiguous };

struct OuterCandidate {
    std::vector<uint32_t> augmented; // k + 2b symbols
    uint32_t distance;
    bool accepted; // AMD verdict
};

struct PipelineResult {
    PipelineStatus status = PipelineStatus::empty;
    std::vector<uint32_t> message; // set only when status == decoded
    std::vector<OuterCandidate> candidates; // outer list order
    GsParams params;
};

// outer list decode at tau, then AMD-verify every candidate; a message comes
// back only when exactly one candidate passes
PipelineResult amd_assisted_decode(const AmdCodec& codec, const std::vector<uint32_t>& r,
                                   uint32_t tau, uint32_t s_max = kDefaultMultiplicityCap);

}
