#pragma once

#include <optional>
#include <string>

#include "testkit.hpp"

namespace twistdec {

// {"field":{"p":..,"e":..}, "code": <grs|tgrs|rl fragment>, "amd":{"b":..}?}
// with unknown keys rejected at every level; field elements are decimal
// integers for e = 1 and little-endian digit arrays for e > 1
struct LoadedSpec {
    FieldPtr field;
    CodeVariant code;
    std::optional<uint32_t> amd_b;
};

LoadedSpec load_spec_json(const std::string& text);
LoadedSpec load_spec_file(const std::string& path);

// requires amd_b and a tgrs or rl outer code
AmdCodec codec_from_spec(const LoadedSpec& spec);

// {"outer": {"field":.., "code":..}, "amd":{"b":..}, "k":..}; the redundant k
// is cross-checked against outer dimension minus 2b
AmdCodec load_codec_json(const std::string& text);

// {"spec": <spec or codec>, "weights":[..], "trials":.., "seed":.., "tau":..}
TrialConfig load_trial_config_json(const std::string& text);
TrialConfig load_trial_config_file(const std::string& path);

std::string slurp_file(const std::string& path);

}
