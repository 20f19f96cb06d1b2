#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "twistdec/pipeline.hpp"
#include "twistdec/spec_io.hpp"

using namespace twistdec;

namespace {

std::vector<uint32_t> parse_csv(const std::string& text, const Field& f) {
    std::vector<uint32_t> out;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string tok =
            text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty symbol in \"" + text + "\"");
        tok = tok.substr(a, b - a + 1);
        uint64_t v = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("symbol \"" + tok + "\" is not a decimal integer");
            v = v * 10 + uint64_t(ch - '0');
            if (v > UINT32_MAX) throw std::invalid_argument("symbol \"" + tok + "\" is too big");
        }
        f.check(uint32_t(v));
        out.push_back(uint32_t(v));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join_csv(const std::vector<uint32_t>& xs) {
    std::string s;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(xs[i]);
    }
    return s;
}

uint32_t random_seed(const Field& ext) {
    std::random_device rd;
    uint64_t raw = (uint64_t(rd()) << 32) | rd();
    return uint32_t(raw % ext.q());
}

int cmd_encode(const std::string& spec_path, const std::string& message_csv,
               std::optional<uint32_t> seed) {
    LoadedSpec spec = load_spec_file(spec_path);
    if (spec.amd_b) {
        AmdCodec codec = codec_from_spec(spec);
        auto m = parse_csv(message_csv, *codec_field(codec));
        uint32_t x = seed ? *seed : random_seed(*codec.amd.ext);
        codec.amd.ext->check(x);
        std::printf("%s\n", join_csv(amd_assisted_encode(codec, m, x)).c_str());
        return 0;
    }
    if (seed)
        throw std::invalid_argument("--seed only applies to amd-assisted specs");
    auto m = parse_csv(message_csv, *code_field(spec.code));
    std::printf("%s\n", join_csv(encode_any(spec.code, m)).c_str());
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& received_csv, uint32_t tau,
               bool list_mode) {
    LoadedSpec spec = load_spec_file(spec_path);

    if (spec.amd_b) {
        AmdCodec codec = codec_from_spec(spec);
        auto r = parse_csv(received_csv, *codec_field(codec));
        PipelineResult res = amd_assisted_decode(codec, r, tau);
        if (list_mode) {
            for (const auto& c : res.candidates)
                std::printf("candidate: %s distance %u amd: %s\n", join_csv(c.augmented).c_str(),
                            c.distance, c.accepted ? "accept" : "reject");
            if (res.candidates.empty()) {
                std::printf("FAIL: no codeword within radius %u\n", tau);
                return 1;
            }
            return 0;
        }
        if (res.status == PipelineStatus::decoded) {
            std::printf("%s\n", join_csv(res.message).c_str());
            return 0;
        }
        if (res.status == PipelineStatus::ambiguous)
            std::printf("FAIL: %zu candidates passed the amd check\n", res.candidates.size());
        else
            std::printf("FAIL: no codeword within radius %u\n", tau);
        return 1;
    }

    auto r = parse_csv(received_csv, *code_field(spec.code));
    std::vector<std::pair<std::vector<uint32_t>, uint32_t>> found;
    if (const auto* g = std::get_if<GrsSpec>(&spec.code)) {
        DecodeList out = gs_list_decode(*g, r, tau);
        for (const auto& c : out.candidates) {
            std::vector<uint32_t> m = c.f.c;
            m.resize(g->k, 0);
            found.push_back({m, c.distance});
        }
    } else if (const auto* t = std::get_if<TgrsSpec>(&spec.code)) {
        TgrsDecodeList out = tgrs_list_decode(*t, r, tau);
        for (const auto& c : out.candidates) found.push_back({c.message, c.distance});
    } else {
        RlDecodeList out = rl_list_decode(std::get<RlSpec>(spec.code), r, tau);
        for (const auto& c : out.candidates) found.push_back({c.message, c.distance});
    }

    if (list_mode) {
        for (const auto& [m, d] : found)
            std::printf("candidate: %s distance %u\n", join_csv(m).c_str(), d);
        if (found.empty()) {
            std::printf("FAIL: no codeword within radius %u\n", tau);
            return 1;
        }
        return 0;
    }
    if (found.size() == 1) {
        std::printf("%s\n", join_csv(found[0].first).c_str());
        return 0;
    }
    if (found.empty())
        std::printf("FAIL: no codeword within radius %u\n", tau);
    else
        std::printf("FAIL: %zu codewords within radius %u\n", found.size(), tau);
    return 1;
}

int cmd_trials(const std::string& config_path, const std::string& out_path, bool timing) {
    TrialConfig config = load_trial_config_file(config_path);
    config.timing = timing;
    std::vector<TrialStats> stats = run_trials(config);
    write_trials_csv(out_path, stats, timing);
    std::printf("%s\n", out_path.c_str());
    return 0;
}

int cmd_oracle(const std::string& spec_path) {
    LoadedSpec spec = load_spec_file(spec_path);
    const Field& F = *code_field(spec.code);
    uint32_t d = min_distance(spec.code);
    std::printf("n = %u, k = %u, q = %u\n", code_length(spec.code), code_dim(spec.code), F.q());
    std::printf("minimum distance: %u\n", d);
    std::printf("classification: %s\n", code_class_name(classify(spec.code)));
    return 0;
}

AmdCodec example1_codec() {
    auto F = Field::make(23);
    std::vector<uint32_t> alphas(23), vs(23, 1);
    for (uint32_t i = 0; i < 23; ++i) alphas[i] = i;
    TgrsSpec outer = make_tgrs_spec(make_grs_spec(F, alphas, vs, 5), {{1, 1, 1}});
    return make_amd_codec(outer, 1);
}

AmdCodec example2_codec() {
    auto F = Field::make(23);
    std::vector<uint32_t> alphas(23), vs(24, 1);
    for (uint32_t i = 0; i < 23; ++i) alphas[i] = i;
    RlSpec outer = make_rl_spec(F, alphas, vs, 6, 4);
    return make_amd_codec(outer, 1);
}

void print_stage(const AmdCodec& codec, const std::vector<uint32_t>& message, uint32_t seed,
                 const std::vector<uint32_t>& error, uint32_t tau) {
    const Field& F = *codec_field(codec);
    uint32_t n = codec_n(codec);
    uint32_t tag = amd_tag(codec.amd, message, seed);
    std::vector<uint32_t> augmented = amd_encode(codec.amd, message, seed);
    std::vector<uint32_t> codeword = amd_assisted_encode(codec, message, seed);

    std::printf("message: %s\n", join_csv(message).c_str());
    std::printf("seed: %u\n", seed);
    std::printf("tag: %u\n", tag);
    std::printf("augmented message: %s\n", join_csv(augmented).c_str());
    std::printf("codeword: %s\n", join_csv(codeword).c_str());

    uint32_t weight = 0;
    for (uint32_t e : error) weight += e != 0;
    std::vector<uint32_t> received(n);
    for (uint32_t i = 0; i < n; ++i) received[i] = F.add(codeword[i], error[i]);
    std::printf("error (weight %u): %s\n", weight, join_csv(error).c_str());
    std::printf("received: %s\n", join_csv(received).c_str());

    PipelineResult res = amd_assisted_decode(codec, received, tau);
    std::printf("decoding radius: %u (multiplicity %u)\n", tau, res.params.s);
    for (const auto& c : res.candidates)
        std::printf("candidate: %s distance %u amd: %s\n", join_csv(c.augmented).c_str(),
                    c.distance, c.accepted ? "accept" : "reject");
    if (res.status == PipelineStatus::decoded)
        std::printf("recovered: %s\n", join_csv(res.message).c_str());
    else
        std::printf("recovered: FAIL\n");
}

int cmd_paper_example(int which) {
    if (which == 1) {
        AmdCodec codec = example1_codec();
        std::printf("field: GF(23)\n");
        std::printf("outer code: twisted, n = 23, k = 5, twist (t, h, eta) = (1, 1, 1)\n");
        std::printf("amd layer: b = 1, message length 3, r = %u\n", codec.amd.r);
        std::vector<uint32_t> error = {0, 0, 7, 0, 1, 0, 0, 0, 8, 8, 5, 0,
                                       0, 0, 0, 8, 0, 9, 17, 4, 11, 11, 0};
        print_stage(codec, {4, 2, 10}, 11, error, 11);
        return 0;
    }
    if (which == 2) {
        AmdCodec codec = example2_codec();
        std::printf("field: GF(23)\n");
        std::printf("outer code: roth-lempel, n = 24, k = 6, delta = 4\n");
        std::printf("amd layer: b = 1, message length 4, r = %u\n", codec.amd.r);
        std::printf("note: the codeword below is regenerated from these parameters;\n");
        std::printf("note: the originally circulated word for this fixture fails re-encoding\n");
        std::printf("note: against its own stated parameters and is not shipped.\n");
        std::vector<uint32_t> error(24, 0);
        error[0] = 5;
        error[2] = 9;
        error[4] = 1;
        error[6] = 22;
        error[8] = 7;
        error[10] = 3;
        error[12] = 11;
        error[14] = 15;
        error[16] = 2;
        print_stage(codec, {18, 13, 14, 21}, 22, error, 9);

        std::printf("amd check %s: %s\n", "22,9,7,12,0,6",
                    amd_verify(codec.amd, {22, 9, 7, 12, 0, 6}) ? "accept" : "reject");
        auto ok = amd_verify(codec.amd, {18, 13, 14, 21, 22, 3});
        if (ok)
            std::printf("amd check %s: accept, message %s\n", "18,13,14,21,22,3",
                        join_csv(*ok).c_str());
        else
            std::printf("amd check %s: reject\n", "18,13,14,21,22,3");
        return 0;
    }
    throw std::invalid_argument("--which must be 1 or 2");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"encoders, list decoders, and trial harness for twisted and roth-lempel codes"};
    app.require_subcommand(1);

    std::string spec_path, message_csv, received_csv, config_path, out_path;
    std::optional<uint32_t> seed;
    uint32_t tau = 0;
    bool list_mode = false, timing = false;
    int which = 0;

    CLI::App* enc = app.add_subcommand("encode", "encode a message under a spec file");
    enc->add_option("--spec", spec_path, "spec json file")->required();
    enc->add_option("--message", message_csv, "comma-separated message symbols")->required();
    enc->add_option("--seed", seed, "amd randomness; drawn from the system if omitted");

    CLI::App* dec = app.add_subcommand("decode", "list- or unique-decode a received word");
    dec->add_option("--spec", spec_path, "spec json file")->required();
    dec->add_option("--received", received_csv, "comma-separated received symbols")->required();
    dec->add_option("--tau", tau, "decoding radius")->required();
    dec->add_flag("--list", list_mode, "print every candidate instead of deciding");

    CLI::App* tri = app.add_subcommand("trials", "run a monte-carlo campaign to a csv");
    tri->add_option("--config", config_path, "trial config json file")->required();
    tri->add_option("--out", out_path, "csv output path")->required();
    tri->add_flag("--timing", timing, "record wall-clock seconds instead of 0.000");

    CLI::App* pex = app.add_subcommand("paper-example", "replay a built-in worked example");
    pex->add_option("--which", which, "1 or 2")->required();

    CLI::App* ora = app.add_subcommand("oracle", "exhaustive minimum distance and class");
    ora->add_option("--spec", spec_path, "spec json file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (enc->parsed()) return cmd_encode(spec_path, message_csv, seed);
        if (dec->parsed()) return cmd_decode(spec_path, received_csv, tau, list_mode);
        if (tri->parsed()) return cmd_trials(config_path, out_path, timing);
        if (pex->parsed()) return cmd_paper_example(which);
        return cmd_oracle(spec_path);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
