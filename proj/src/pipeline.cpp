#include "twistdec/pipeline.hpp"

#include <type_traits>

namespace twistdec {

namespace {

uint32_t outer_dim(const OuterSpec& outer) {
    return std::visit([](const auto& s) -> uint32_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, TgrsSpec>)
            return s.base.k;
        else
            return s.k;
    }, outer);
}

const FieldPtr& outer_field(const OuterSpec& outer) {
    return std::visit([](const auto& s) -> const FieldPtr& {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, TgrsSpec>)
            return s.base.f;
        else
            return s.f;
    }, outer);
}

}

AmdCodec make_amd_codec(OuterSpec outer, uint32_t b) {
    uint32_t dim = outer_dim(outer);
    if (b < 1) throw std::invalid_argument("make_amd_codec: need b >= 1");
    if (dim <= 2 * b)
        throw std::invalid_argument("make_amd_codec: outer dimension must exceed 2b");
    AmdParams amd = make_amd_params(outer_field(outer), dim - 2 * b, b);
    return AmdCodec{std::move(outer), std::move(amd)};
}

uint32_t codec_n(const AmdCodec& codec) {
    return std::visit([](const auto& s) -> uint32_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, TgrsSpec>)
            return s.base.n();
        else
            return s.n();
    }, codec.outer);
}

uint32_t codec_dim(const AmdCodec& codec) { return outer_dim(codec.outer); }

uint32_t codec_message_len(const AmdCodec& codec) { return codec.amd.k; }

const FieldPtr& codec_field(const AmdCodec& codec) { return outer_field(codec.outer); }

std::vector<uint32_t> amd_assisted_encode(const AmdCodec& codec, const std::vector<uint32_t>& m,
                                          uint32_t seed) {
    std::vector<uint32_t> aug = amd_encode(codec.amd, m, seed);
    return std::visit([&aug](const auto& s) {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, TgrsSpec>)
            return tgrs_encode(s, aug);
        else
            return rl_encode(s, aug);
    }, codec.outer);
}

std::vector<uint32_t> amd_assisted_encode(const AmdCodec& codec, const std::vector<uint32_t>& m,
                                          const std::function<uint32_t(uint32_t)>& draw) {
    return amd_assisted_encode(codec, m, draw(codec.amd.ext->q()));
}

PipelineResult amd_assisted_decode(const AmdCodec& codec, const std::vector<uint32_t>& r,
                                   uint32_t tau, uint32_t s_max) {
    PipelineResult R;
    std::vector<std::pair<std::vector<uint32_t>, uint32_t>> outer;
    if (const TgrsSpec* t = std::get_if<TgrsSpec>(&codec.outer)) {
        TgrsDecodeList L = tgrs_list_decode(*t, r, tau, s_max);
        R.params = std::move(L.params);
        for (TgrsCandidate& c : L.candidates) outer.emplace_back(std::move(c.message), c.distance);
    } else {
        RlDecodeList L = rl_list_decode(std::get<RlSpec>(codec.outer), r, tau, s_max);
        R.params = std::move(L.params);
        for (RlCandidate& c : L.candidates) outer.emplace_back(std::move(c.message), c.distance);
    }

    size_t passes = 0;
    for (auto& [aug, dist] : outer) {
        std::optional<std::vector<uint32_t>> m = amd_verify(codec.amd, aug);
        if (m) {
            ++passes;
            if (passes == 1) R.message = std::move(*m);
        }
        R.candidates.push_back({std::move(aug), dist, m.has_value()});
    }
    if (passes == 1) {
        R.status = PipelineStatus::decoded;
    } else {
        // zero or several survivors both mean failure; never guess
        R.message.clear();
        R.status = passes == 0 ? PipelineStatus::empty : PipelineStatus::ambiguous;
    }
    return R;
}

}
