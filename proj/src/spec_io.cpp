#include "twistdec/spec_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace twistdec {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw std::invalid_argument(where + ": " + what);
}

void expect_keys(const json& j, const std::string& where,
                 std::initializer_list<const char*> keys) {
    if (!j.is_object()) fail(where, "expected an object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys)
            if (item.key() == k) { known = true; break; }
        if (!known) fail(where, "unknown key \"" + item.key() + "\"");
    }
}

const json& get_required(const json& j, const std::string& where, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

uint64_t parse_u64(const json& v, const std::string& where) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        fail(where, "expected a non-negative integer");
    if (v.is_number_integer() && v.get<int64_t>() < 0)
        fail(where, "expected a non-negative integer");
    return v.get<uint64_t>();
}

uint32_t parse_u32(const json& v, const std::string& where) {
    uint64_t x = parse_u64(v, where);
    if (x > UINT32_MAX) fail(where, "value out of range");
    return uint32_t(x);
}

uint32_t get_u32(const json& j, const std::string& where, const char* key) {
    return parse_u32(get_required(j, where, key), where + "." + key);
}

uint32_t parse_element(const Field& f, const json& v, const std::string& where) {
    if (f.e() == 1) {
        uint32_t code = parse_u32(v, where);
        if (code >= f.q()) fail(where, "element out of range for the field");
        return code;
    }
    if (!v.is_array() || v.size() != f.e())
        fail(where, "expected a little-endian digit array of length " +
                        std::to_string(f.e()));
    std::vector<uint32_t> digits(f.e());
    for (size_t i = 0; i < digits.size(); ++i) {
        digits[i] = parse_u32(v[i], where + "[" + std::to_string(i) + "]");
        if (digits[i] >= f.p()) fail(where, "digit out of range for the field");
    }
    return f.from_digits(digits);
}

std::vector<uint32_t> parse_elements(const FieldPtr& f, const json& v,
                                     const std::string& where) {
    if (!v.is_array()) fail(where, "expected an array");
    std::vector<uint32_t> out(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        out[i] = parse_element(*f, v[i], where + "[" + std::to_string(i) + "]");
    return out;
}

FieldPtr parse_field(const json& j, const std::string& where) {
    expect_keys(j, where, {"p", "e"});
    uint32_t p = get_u32(j, where, "p");
    uint32_t e = j.contains("e") ? parse_u32(j.at("e"), where + ".e") : 1;
    return Field::make(p, e);
}

CodeVariant parse_code(const FieldPtr& f, const json& j, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    const json& tj = get_required(j, where, "type");
    if (!tj.is_string()) fail(where + ".type", "expected a string");
    std::string type = tj.get<std::string>();

    if (type == "grs" || type == "tgrs") {
        if (type == "grs")
            expect_keys(j, where, {"type", "k", "alphas", "vs"});
        else
            expect_keys(j, where, {"type", "k", "alphas", "vs", "twists"});
        uint32_t k = get_u32(j, where, "k");
        auto alphas = parse_elements(f, get_required(j, where, "alphas"), where + ".alphas");
        auto vs = parse_elements(f, get_required(j, where, "vs"), where + ".vs");
        GrsSpec base = make_grs_spec(f, alphas, vs, k);
        if (type == "grs") return base;

        const json& twj = get_required(j, where, "twists");
        if (!twj.is_array()) fail(where + ".twists", "expected an array");
        std::vector<TwistTriple> twists;
        for (size_t i = 0; i < twj.size(); ++i) {
            std::string tw = where + ".twists[" + std::to_string(i) + "]";
            expect_keys(twj[i], tw, {"t", "h", "eta"});
            TwistTriple triple;
            triple.t = get_u32(twj[i], tw, "t");
            triple.h = get_u32(twj[i], tw, "h");
            triple.eta = parse_element(*f, get_required(twj[i], tw, "eta"), tw + ".eta");
            twists.push_back(triple);
        }
        return make_tgrs_spec(base, twists);
    }

    if (type == "rl") {
        expect_keys(j, where, {"type", "k", "alphas", "vs", "delta"});
        uint32_t k = get_u32(j, where, "k");
        auto alphas = parse_elements(f, get_required(j, where, "alphas"), where + ".alphas");
        auto vs = parse_elements(f, get_required(j, where, "vs"), where + ".vs");
        uint32_t delta = parse_element(*f, get_required(j, where, "delta"), where + ".delta");
        return make_rl_spec(f, alphas, vs, k, delta);
    }

    fail(where + ".type", "expected \"grs\", \"tgrs\", or \"rl\"");
}

LoadedSpec parse_spec(const json& j, const std::string& where) {
    expect_keys(j, where, {"field", "code", "amd"});
    LoadedSpec out;
    out.field = parse_field(get_required(j, where, "field"), where + ".field");
    out.code = parse_code(out.field, get_required(j, where, "code"), where + ".code");
    if (j.contains("amd")) {
        std::string aw = where + ".amd";
        expect_keys(j.at("amd"), aw, {"b"});
        out.amd_b = get_u32(j.at("amd"), aw, "b");
    }
    return out;
}

OuterSpec to_outer(const CodeVariant& code, const std::string& where) {
    if (const auto* t = std::get_if<TgrsSpec>(&code)) return *t;
    if (const auto* r = std::get_if<RlSpec>(&code)) return *r;
    fail(where, "amd layer needs a tgrs or rl outer code");
}

AmdCodec parse_codec(const json& j, const std::string& where) {
    expect_keys(j, where, {"outer", "amd", "k"});
    const json& oj = get_required(j, where, "outer");
    std::string ow = where + ".outer";
    expect_keys(oj, ow, {"field", "code"});
    FieldPtr f = parse_field(get_required(oj, ow, "field"), ow + ".field");
    CodeVariant code = parse_code(f, get_required(oj, ow, "code"), ow + ".code");

    std::string aw = where + ".amd";
    const json& aj = get_required(j, where, "amd");
    expect_keys(aj, aw, {"b"});
    uint32_t b = get_u32(aj, aw, "b");

    AmdCodec codec = make_amd_codec(to_outer(code, ow + ".code"), b);
    uint32_t k = get_u32(j, where, "k");
    if (k != codec.amd.k)
        fail(where + ".k", "expected " + std::to_string(codec.amd.k) +
                               " (outer dimension minus 2b), got " + std::to_string(k));
    return codec;
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("json: ") + e.what());
    }
}

}  // namespace

LoadedSpec load_spec_json(const std::string& text) {
    return parse_spec(parse_text(text), "spec");
}

LoadedSpec load_spec_file(const std::string& path) {
    return load_spec_json(slurp_file(path));
}

AmdCodec codec_from_spec(const LoadedSpec& spec) {
    if (!spec.amd_b) throw std::invalid_argument("spec: no amd block");
    return make_amd_codec(to_outer(spec.code, "spec.code"), *spec.amd_b);
}

AmdCodec load_codec_json(const std::string& text) {
    return parse_codec(parse_text(text), "codec");
}

TrialConfig load_trial_config_json(const std::string& text) {
    json j = parse_text(text);
    std::string where = "trials";
    expect_keys(j, where, {"spec", "weights", "trials", "seed", "tau"});

    TrialConfig config;
    const json& sj = get_required(j, where, "spec");
    std::string sw = where + ".spec";
    if (sj.is_object() && sj.contains("outer")) {
        config.subject = parse_codec(sj, sw);
    } else {
        LoadedSpec spec = parse_spec(sj, sw);
        if (spec.amd_b)
            config.subject = codec_from_spec(spec);
        else
            config.subject = spec.code;
    }

    const json& wj = get_required(j, where, "weights");
    if (!wj.is_array() || wj.empty()) fail(where + ".weights", "expected a nonempty array");
    for (size_t i = 0; i < wj.size(); ++i)
        config.weights.push_back(
            parse_u32(wj[i], where + ".weights[" + std::to_string(i) + "]"));

    config.trials_per_weight = get_u32(j, where, "trials");
    config.master_seed = parse_u64(get_required(j, where, "seed"), where + ".seed");
    config.tau = get_u32(j, where, "tau");
    return config;
}

TrialConfig load_trial_config_file(const std::string& path) {
    return load_trial_config_json(slurp_file(path));
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace twistdec
