#include "twistdec/testkit.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <type_traits>

namespace twistdec {

uint32_t code_dim(const CodeVariant& code) {
    return std::visit([](const auto& s) -> uint32_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TgrsSpec>)
            return s.base.k;
        else
            return s.k;
    }, code);
}

uint32_t code_length(const CodeVariant& code) {
    return std::visit([](const auto& s) -> uint32_t {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TgrsSpec>)
            return s.base.n();
        else
            return s.n();
    }, code);
}

const FieldPtr& code_field(const CodeVariant& code) {
    return std::visit([](const auto& s) -> const FieldPtr& {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TgrsSpec>)
            return s.base.f;
        else
            return s.f;
    }, code);
}

std::vector<uint32_t> encode_any(const CodeVariant& code, const std::vector<uint32_t>& message) {
    return std::visit([&message](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, GrsSpec>)
            return grs_encode(s, message);
        else if constexpr (std::is_same_v<T, TgrsSpec>)
            return tgrs_encode(s, message);
        else
            return rl_encode(s, message);
    }, code);
}

uint64_t enumeration_cap() {
    const char* env = std::getenv("TWISTDEC_ENUM_CAP");
    if (!env || !*env) return uint64_t(1) << 20;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (!end || *end != '\0' || v == 0)
        throw std::invalid_argument("TWISTDEC_ENUM_CAP must be a positive integer");
    return v;
}

void enumerate_codewords(
    const CodeVariant& code,
    const std::function<void(const std::vector<uint32_t>&, const std::vector<uint32_t>&)>& visit,
    std::optional<uint64_t> cap) {
    const Field& F = *code_field(code);
    uint32_t k = code_dim(code), n = code_length(code), q = F.q();
    uint64_t budget = cap ? *cap : enumeration_cap();
    uint64_t total = 1;
    for (uint32_t i = 0; i < k; ++i) {
        if (total > budget / q)
            throw std::invalid_argument("enumerate_codewords: q^k exceeds the enumeration cap");
        total *= q;
    }

    std::vector<std::vector<uint32_t>> col(k);
    {
        std::vector<uint32_t> unit(k, 0);
        for (uint32_t j = 0; j < k; ++j) {
            unit[j] = 1;
            col[j] = encode_any(code, unit);
            unit[j] = 0;
        }
    }

    // odometer over message digits, most significant first; each digit change
    // adds (new - old) * basis column to the running codeword
    std::vector<uint32_t> msg(k, 0), cw(n, 0);
    for (;;) {
        visit(msg, cw);
        int j = int(k) - 1;
        while (j >= 0) {
            uint32_t prev = msg[j];
            uint32_t next = prev + 1 < q ? prev + 1 : 0;
            msg[j] = next;
            uint32_t d = F.sub(next, prev);
            const std::vector<uint32_t>& cj = col[j];
            for (uint32_t i = 0; i < n; ++i) cw[i] = F.add(cw[i], F.mul(d, cj[i]));
            if (next != 0) break;
            --j;
        }
        if (j < 0) break;
    }
}

std::vector<std::vector<uint32_t>> nearest_list(const CodeVariant& code,
                                                const std::vector<uint32_t>& r, uint32_t tau,
                                                std::optional<uint64_t> cap) {
    if (r.size() != code_length(code))
        throw std::invalid_argument("nearest_list: received word length mismatch");
    std::vector<std::vector<uint32_t>> out;
    enumerate_codewords(code, [&](const std::vector<uint32_t>& m, const std::vector<uint32_t>& cw) {
        uint32_t d = 0;
        for (size_t i = 0; i < cw.size(); ++i)
            if (cw[i] != r[i]) ++d;
        if (d <= tau) out.push_back(m);
    }, cap);
    return out; // enumeration order is already lexicographic
}

uint32_t min_distance(const CodeVariant& code, std::optional<uint64_t> cap) {
    uint32_t best = code_length(code) + 1;
    bool any = false;
    enumerate_codewords(code, [&](const std::vector<uint32_t>& m, const std::vector<uint32_t>& cw) {
        (void)m;
        uint32_t w = 0;
        for (uint32_t x : cw)
            if (x) ++w;
        if (w == 0) return; // the zero codeword
        any = true;
        best = std::min(best, w);
    }, cap);
    if (!any) throw std::invalid_argument("min_distance: code has no nonzero codeword");
    return best;
}

CodeClass classify(const CodeVariant& code, std::optional<uint64_t> cap) {
    uint32_t d = min_distance(code, cap);
    uint32_t n = code_length(code), k = code_dim(code);
    if (d == n - k + 1) return CodeClass::mds;
    if (d + k == n) return CodeClass::nmds;
    return CodeClass::other;
}

const char* code_class_name(CodeClass c) {
    switch (c) {
        case CodeClass::mds: return "mds";
        case CodeClass::nmds: return "nmds";
        default: return "other";
    }
}

Poly lagrange_interpolate(const FieldPtr& fp,
                          const std::vector<std::pair<uint32_t, uint32_t>>& points) {
    if (!fp) throw std::invalid_argument("lagrange_interpolate: null field");
    if (points.empty()) throw std::invalid_argument("lagrange_interpolate: no points");
    const Field& F = *fp;
    {
        std::set<uint32_t> xs;
        for (const auto& [x, y] : points) {
            F.check(x);
            F.check(y);
            if (!xs.insert(x).second)
                throw std::invalid_argument("lagrange_interpolate: repeated x coordinate");
        }
    }
    Poly acc = poly_zero(fp);
    for (size_t j = 0; j < points.size(); ++j) {
        if (points[j].second == 0) continue;
        Poly num = poly_const(fp, 1);
        uint32_t den = 1;
        for (size_t m = 0; m < points.size(); ++m) {
            if (m == j) continue;
            num = mul(num, make_poly(fp, {F.neg(points[m].first), 1}));
            den = F.mul(den, F.sub(points[j].first, points[m].first));
        }
        acc = add(acc, scale(num, F.mul(points[j].second, F.inv(den))));
    }
    return acc;
}

uint64_t Rng::below(uint64_t m) {
    if (m == 0) throw std::invalid_argument("Rng::below: empty range");
    uint64_t rem = UINT64_MAX % m;
    if (rem == m - 1) return gen_() % m; // 2^64 is a multiple of m
    uint64_t limit = UINT64_MAX - rem;   // largest multiple of m below 2^64
    uint64_t x;
    do {
        x = gen_();
    } while (x >= limit);
    return x % m;
}

std::vector<uint32_t> random_message(const Field& f, size_t len, Rng& rng) {
    std::vector<uint32_t> out(len);
    for (uint32_t& x : out) x = uint32_t(rng.below(f.q()));
    return out;
}

std::vector<uint32_t> random_error(const Field& f, uint32_t n, uint32_t weight, Rng& rng) {
    if (weight > n) throw std::invalid_argument("random_error: weight exceeds length");
    std::vector<uint32_t> idx(n);
    for (uint32_t i = 0; i < n; ++i) idx[i] = i;
    std::vector<uint32_t> out(n, 0);
    for (uint32_t i = 0; i < weight; ++i) {
        uint32_t j = i + uint32_t(rng.below(n - i));
        std::swap(idx[i], idx[j]);
        out[idx[i]] = 1 + uint32_t(rng.below(f.q() - 1));
    }
    return out;
}

namespace {

struct TrialTally {
    uint32_t successes = 0, failures = 0, ambiguous = 0, false_accepts = 0, max_list = 0;
    uint64_t list_total = 0;
};

void one_bare_trial(const CodeVariant& code, uint32_t weight, uint32_t tau, Rng& rng,
                    TrialTally& tally) {
    const Field& F = *code_field(code);
    uint32_t n = code_length(code);
    std::vector<uint32_t> msg = random_message(F, code_dim(code), rng);
    std::vector<uint32_t> err = random_error(F, n, weight, rng);
    std::vector<uint32_t> r = encode_any(code, msg);
    for (uint32_t i = 0; i < n; ++i) r[i] = F.add(r[i], err[i]);

    size_t list_size = 0;
    bool found = false;
    try {
        if (const GrsSpec* g = std::get_if<GrsSpec>(&code)) {
            DecodeList L = gs_list_decode(*g, r, tau);
            list_size = L.candidates.size();
            for (const Candidate& c : L.candidates) {
                std::vector<uint32_t> m = c.f.c;
                m.resize(g->k, 0);
                if (m == msg) found = true;
            }
        } else if (const TgrsSpec* t = std::get_if<TgrsSpec>(&code)) {
            TgrsDecodeList L = tgrs_list_decode(*t, r, tau);
            list_size = L.candidates.size();
            for (const TgrsCandidate& c : L.candidates)
                if (c.message == msg) found = true;
        } else {
            RlDecodeList L = rl_list_decode(std::get<RlSpec>(code), r, tau);
            list_size = L.candidates.size();
            for (const RlCandidate& c : L.candidates)
                if (c.message == msg) found = true;
        }
    } catch (const std::invalid_argument&) {
        ++tally.failures; // infeasible radius or malformed word counts, never aborts
        return;
    }
    tally.list_total += list_size;
    tally.max_list = std::max(tally.max_list, uint32_t(list_size));
    if (found)
        ++tally.successes;
    else
        ++tally.failures;
}

void one_codec_trial(const AmdCodec& codec, uint32_t weight, uint32_t tau, Rng& rng,
                     TrialTally& tally) {
    const Field& F = *codec_field(codec);
    uint32_t n = codec_n(codec);
    std::vector<uint32_t> msg = random_message(F, codec_message_len(codec), rng);
    uint32_t seed = uint32_t(rng.below(codec.amd.ext->q()));
    std::vector<uint32_t> err = random_error(F, n, weight, rng);
    std::vector<uint32_t> sent = amd_encode(codec.amd, msg, seed);
    std::vector<uint32_t> r = amd_assisted_encode(codec, msg, seed);
    for (uint32_t i = 0; i < n; ++i) r[i] = F.add(r[i], err[i]);

    PipelineResult R;
    try {
        R = amd_assisted_decode(codec, r, tau);
    } catch (const std::invalid_argument&) {
        ++tally.failures;
        return;
    }
    tally.list_total += R.candidates.size();
    tally.max_list = std::max(tally.max_list, uint32_t(R.candidates.size()));
    for (const OuterCandidate& c : R.candidates)
        if (c.accepted && c.augmented != sent) {
            ++tally.false_accepts;
            break;
        }
    if (R.status == PipelineStatus::decoded && R.message == msg)
        ++tally.successes;
    else if (R.status == PipelineStatus::ambiguous)
        ++tally.ambiguous;
    else
        ++tally.failures;
}

}

std::vector<TrialStats> run_trials(const TrialConfig& config) {
    if (config.weights.empty())
        throw std::invalid_argument("run_trials: no error weights given");
    if (config.trials_per_weight == 0)
        throw std::invalid_argument("run_trials: need at least one trial per weight");

    std::vector<TrialStats> out;
    for (size_t w = 0; w < config.weights.size(); ++w) {
        auto t0 = std::chrono::steady_clock::now();
        TrialTally tally;
        for (uint32_t t = 0; t < config.trials_per_weight; ++t) {
            uint64_t index = uint64_t(w) * config.trials_per_weight + t;
            Rng rng(config.master_seed ^ index);
            if (const CodeVariant* code = std::get_if<CodeVariant>(&config.subject))
                one_bare_trial(*code, config.weights[w], config.tau, rng, tally);
            else
                one_codec_trial(std::get<AmdCodec>(config.subject), config.weights[w], config.tau,
                                rng, tally);
        }
        auto t1 = std::chrono::steady_clock::now();

        TrialStats S;
        S.weight = config.weights[w];
        S.trials = config.trials_per_weight;
        S.successes = tally.successes;
        S.failures = tally.failures;
        S.ambiguous = tally.ambiguous;
        S.mean_list = double(tally.list_total) / config.trials_per_weight;
        S.max_list = tally.max_list;
        S.amd_false_accepts = tally.false_accepts;
        S.seconds = config.timing ? std::chrono::duration<double>(t1 - t0).count() : 0.0;
        out.push_back(S);
    }
    return out;
}

std::string trials_csv(const std::vector<TrialStats>& stats, bool timing) {
    (void)timing; // seconds were already zeroed by run_trials unless requested
    std::string s = "weight,trials,successes,failures,ambiguous,mean_list,max_list,"
                    "amd_false_accepts,seconds\n";
    char line[256];
    for (const TrialStats& t : stats) {
        std::snprintf(line, sizeof line, "%u,%u,%u,%u,%u,%.6f,%u,%u,%.3f\n", t.weight, t.trials,
                      t.successes, t.failures, t.ambiguous, t.mean_list, t.max_list,
                      t.amd_false_accepts, t.seconds);
        s += line;
    }
    return s;
}

void write_trials_csv(const std::string& path, const std::vector<TrialStats>& stats, bool timing) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("write_trials_csv: cannot open " + path);
    out << trials_csv(stats, timing);
}

}
