// Command-line front end: build, encode, decode, verify, bounds, simulate.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linhash/linhash.hpp"

namespace {

using namespace linhash;

// Exit codes: 0 success, 1 usage, 2 no solution, 3 construction failed,
// 4 verification failure, 5 uncorrectable frames present.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNoSolution = 2;
constexpr int kConstructionFailed = 3;
constexpr int kVerifyFailed = 4;
constexpr int kUncorrectable = 5;

struct DistortionFlags {
    std::string file;
    uint32_t weight = 0;
    std::string burst;

    bool any() const { return !file.empty() || weight > 0 || !burst.empty(); }

    void attach(CLI::App* cmd, bool* used_excl = nullptr) {
        auto* f = cmd->add_option("--distortions", file, "distortion-set file (header \"L <n>\", one word per line)");
        auto* w = cmd->add_option("--weight", weight, "all patterns of weight 1..t");
        auto* b = cmd->add_option("--burst", burst, "burst patterns, b[:strict|general]");
        f->excludes(w)->excludes(b);
        w->excludes(b);
        (void)used_excl;
    }

    // Resolves the flags into a concrete set over words of the given length.
    // When the length is unknown (0), only --distortions can supply it.
    std::optional<DistortionSet> resolve(uint32_t length, std::string& err) const {
        try {
            if (!file.empty()) {
                std::ifstream in(file, std::ios::binary);
                if (!in) { err = "cannot open " + file; return std::nullopt; }
                DistortionParse parsed = parse_distortion_file(in);
                if (!parsed.ok()) {
                    err = file + ":" + std::to_string(parsed.line) + ": " + parsed.error;
                    return std::nullopt;
                }
                if (length != 0 && parsed.set->length() != length) {
                    err = "distortion file is for L=" + std::to_string(parsed.set->length()) +
                          ", expected L=" + std::to_string(length);
                    return std::nullopt;
                }
                return parsed.set;
            }
            if (length == 0) { err = "message length unknown; pass --L"; return std::nullopt; }
            if (weight > 0) return DistortionSet::weight_ball(length, weight);
            if (!burst.empty()) {
                std::string spec = burst;
                BurstVariant variant = BurstVariant::general;
                if (auto colon = spec.find(':'); colon != std::string::npos) {
                    std::string v = spec.substr(colon + 1);
                    spec.resize(colon);
                    if (v == "strict") variant = BurstVariant::strict;
                    else if (v == "general") variant = BurstVariant::general;
                    else { err = "burst variant must be strict or general"; return std::nullopt; }
                }
                int b = std::stoi(spec);
                if (b < 1) { err = "burst length must be >= 1"; return std::nullopt; }
                return DistortionSet::burst(length, static_cast<uint32_t>(b), variant);
            }
        } catch (const std::exception& e) {
            err = e.what();
            return std::nullopt;
        }
        err = "no distortion model given";
        return std::nullopt;
    }

    // Re-creates the set recorded in code-file metadata, when possible.
    static std::optional<DistortionSet> from_descriptor(const std::string& desc, uint32_t length) {
        try {
            if (desc.rfind("weight:", 0) == 0)
                return DistortionSet::weight_ball(length, static_cast<uint32_t>(std::stoul(desc.substr(7))));
            if (desc.rfind("burst:", 0) == 0) {
                std::string rest = desc.substr(6);
                auto colon = rest.find(':');
                uint32_t b = static_cast<uint32_t>(std::stoul(rest.substr(0, colon)));
                BurstVariant v = BurstVariant::general;
                if (colon != std::string::npos && rest.substr(colon + 1) == "strict")
                    v = BurstVariant::strict;
                return DistortionSet::burst(length, b, v);
            }
        } catch (const std::exception&) {
        }
        return std::nullopt;
    }
};

std::optional<std::string> metadata_value(const CodeSpec& spec, const std::string& key) {
    for (const auto& [k, v] : spec.metadata)
        if (k == key) return v;
    return std::nullopt;
}

int run_build(uint32_t L, uint32_t d, const std::string& mode_str, int algorithm,
              uint32_t delta, std::optional<uint64_t> seed, const DistortionFlags& dist,
              const std::string& out_path) {
    CodeMode mode = mode_str == "correct" ? CodeMode::correct : CodeMode::detect;

    CodeSpec* built = nullptr;
    std::optional<CodeSpec> spec;
    std::optional<SyndromeTable> table;
    std::optional<DistortionSet> syndrome_set;

    if (d > 0) {
        if (L == 0) { std::cerr << "error: --d needs --L\n"; return kUsage; }
        if (d < 2 || d >= L) { std::cerr << "error: need 2 <= d < L\n"; return kUsage; }
        if (mode == CodeMode::correct && d < 3) {
            std::cerr << "error: correction needs d >= 3 (floor((d-1)/2) errors)\n";
            return kUsage;
        }
        BoundedWeightParams params{L, d, delta, seed.value_or(0)};
        BoundedWeightResult res;
        switch (algorithm) {
            case 1: res = construct_alg1(params); break;
            case 2: res = construct_alg2(params); break;
            case 3:
                if (!seed) { std::cerr << "error: --algorithm 3 requires --seed\n"; return kUsage; }
                res = construct_alg3(params);
                break;
            default: std::cerr << "error: --algorithm must be 1, 2 or 3\n"; return kUsage;
        }
        switch (res.status) {
            case ConstructStatus::ok: break;
            case ConstructStatus::no_solution:
                std::cerr << "no solution: " << res.message << "\n";
                return kNoSolution;
            case ConstructStatus::choice_set_empty:
            case ConstructStatus::construction_failed:
                std::cerr << "construction failed: " << res.message << "\n";
                return kConstructionFailed;
            case ConstructStatus::verification_failed:
                std::cerr << "verification failed: " << res.message << "\n";
                return kVerifyFailed;
        }
        spec.emplace(spec_from_bounded(*res.code, mode));
        spec->metadata.emplace_back("algorithm", algorithm_name(res.code->trace.algorithm));
        spec->metadata.emplace_back("d", std::to_string(d));
        if (algorithm == 3) {
            spec->metadata.emplace_back("delta", std::to_string(delta));
            spec->metadata.emplace_back("seed", std::to_string(*seed));
            spec->metadata.emplace_back("rng", res.code->trace.rng);
        }
        if (mode == CodeMode::correct) {
            uint32_t t = (d - 1) / 2;
            syndrome_set = DistortionSet::weight_ball(L, t);
            spec->metadata.emplace_back("distortions", syndrome_set->descriptor());
        }
        std::cout << "l=" << spec->check_length() << " info=" << spec->info_length() << "\n";
        if (algorithm == 3) {
            Pow2Rational bound = success_bound(L, d, delta);
            std::cout << "success_bound=" << bound.to_string() << " (~" << bound.to_double() << ")\n";
        }
    } else {
        if (algorithm != 0) {
            std::cerr << "error: --algorithm applies only to --d builds\n";
            return kUsage;
        }
        std::string err;
        auto D = dist.resolve(L, err);
        if (!D) { std::cerr << "error: " << err << "\n"; return kUsage; }
        GeneralBuild res = mode == CodeMode::detect ? construct_detector(*D)
                                                    : construct_corrector(*D);
        if (!res.ok()) {
            std::cerr << "no solution: " << res.message << "\n";
            return kNoSolution;
        }
        spec.emplace(spec_from_general(*res.result));
        spec->metadata.emplace_back("algorithm",
                                    mode == CodeMode::detect ? "general-detect" : "general-correct");
        spec->metadata.emplace_back("distortions", D->descriptor());
        spec->metadata.emplace_back(mode == CodeMode::detect ? "max_dprime" : "max_f",
                                    std::to_string(res.result->derived_stat));
        if (!res.result->verified_exhaustive) spec->metadata.emplace_back("verified", "sampled");
        if (mode == CodeMode::correct) syndrome_set = std::move(D);
        std::cout << "l=" << spec->check_length() << " info=" << spec->info_length() << "\n";
    }
    built = &*spec;

    if (mode == CodeMode::correct) {
        SyndromeBuild sb = build_syndrome_table(*built, *syndrome_set);
        if (!sb.ok()) {
            std::cerr << "verification failed: " << sb.message << "\n";
            return kVerifyFailed;
        }
        table = std::move(*sb.table);
    }

    std::string err;
    if (!save_code(out_path, *built, table ? &*table : nullptr, &err)) {
        std::cerr << "error: " << err << "\n";
        return kUsage;
    }
    return kOk;
}

int run_encode(const std::string& code_path, const std::string& in_path,
               const std::string& out_path, const std::string& format) {
    LoadResult lr = load_code(code_path);
    if (!lr.ok()) {
        std::cerr << "error: " << code_path << ": " << lr.error->message << "\n";
        return kUsage;
    }
    const CodeSpec& spec = lr.code->spec;

    std::ifstream in(in_path, std::ios::binary);
    if (!in) { std::cerr << "error: cannot open " << in_path << "\n"; return kUsage; }
    FrameReadResult frames = format == "bits" ? read_frames_bits(in, spec.info_length())
                                              : read_frames_text(in, spec.info_length());
    if (!frames.ok) { std::cerr << "error: " << in_path << ": " << frames.error << "\n"; return kUsage; }

    std::vector<BitWord> encoded;
    encoded.reserve(frames.frames.size());
    for (const BitWord& info : frames.frames) encoded.push_back(encode(spec, info));

    std::ofstream out(out_path, std::ios::binary);
    if (!out) { std::cerr << "error: cannot open " << out_path << "\n"; return kUsage; }
    if (format == "bits") {
        std::string err;
        if (!write_frames_bits(out, encoded, &err)) {
            std::cerr << "error: " << err << "\n";
            return kUsage;
        }
    } else {
        write_frames_text(out, encoded);
    }
    return kOk;
}

int run_decode(const std::string& code_path, const std::string& in_path,
               const std::string& out_path, const std::string& format,
               const std::string& log_path) {
    LoadResult lr = load_code(code_path);
    if (!lr.ok()) {
        std::cerr << "error: " << code_path << ": " << lr.error->message << "\n";
        return kUsage;
    }
    const CodeSpec& spec = lr.code->spec;
    if (spec.mode() == CodeMode::correct && !lr.code->syndromes) {
        std::cerr << "error: correct-mode code file has no syndrome table\n";
        return kUsage;
    }

    std::ifstream in(in_path, std::ios::binary);
    if (!in) { std::cerr << "error: cannot open " << in_path << "\n"; return kUsage; }
    FrameReadResult frames = format == "bits" ? read_frames_bits(in, spec.message_length())
                                              : read_frames_text(in, spec.message_length());
    if (!frames.ok) { std::cerr << "error: " << in_path << ": " << frames.error << "\n"; return kUsage; }

    std::ofstream out(out_path, std::ios::binary);
    if (!out) { std::cerr << "error: cannot open " << out_path << "\n"; return kUsage; }

    std::ofstream log_file;
    std::ostream* log = &std::cerr;
    if (!log_path.empty()) {
        log_file.open(log_path, std::ios::binary);
        if (!log_file) { std::cerr << "error: cannot open " << log_path << "\n"; return kUsage; }
        log = &log_file;
    }

    if (spec.mode() == CodeMode::detect) {
        for (const BitWord& y : frames.frames) out << (detect(spec, y).clean ? 'C' : 'E');
        out << "\n";
        return kOk;
    }

    bool any_uncorrectable = false;
    std::vector<BitWord> recovered;
    recovered.reserve(frames.frames.size());
    for (size_t i = 0; i < frames.frames.size(); ++i) {
        CorrectOutcome res = correct(spec, *lr.code->syndromes, frames.frames[i]);
        BitWord x = frames.frames[i];
        if (res.kind == CorrectOutcome::Kind::corrected) {
            x = *res.codeword;
            *log << "frame " << i << ": corrected " << res.distortion->to_string() << "\n";
        } else if (res.kind == CorrectOutcome::Kind::uncorrectable) {
            any_uncorrectable = true;
            *log << "frame " << i << ": uncorrectable syndrome " << res.syndrome.to_string() << "\n";
        }
        recovered.push_back(extract_info(spec, x));
    }
    if (format == "bits") {
        std::string err;
        if (!write_frames_bits(out, recovered, &err)) {
            std::cerr << "error: " << err << "\n";
            return kUsage;
        }
    } else {
        write_frames_text(out, recovered);
    }
    return any_uncorrectable ? kUncorrectable : kOk;
}

int run_verify(const std::string& code_path, uint32_t d, const DistortionFlags& dist,
               bool exhaustive, uint64_t trials, uint64_t seed, bool machine) {
    LoadResult lr = load_code(code_path);
    if (!lr.ok()) {
        const auto& e = *lr.error;
        std::cerr << "invalid code file: " << code_path;
        if (e.line) std::cerr << ":" << e.line;
        if (!e.invariant.empty()) std::cerr << " [" << e.invariant << "]";
        std::cerr << ": " << e.message << "\n";
        return kVerifyFailed;
    }
    const CodeSpec& spec = lr.code->spec;
    VerificationReport report;

    uint32_t target_d = d;
    if (target_d == 0) {
        if (auto v = metadata_value(spec, "d")) target_d = static_cast<uint32_t>(std::stoul(*v));
    }

    try {
        if (target_d >= 2) {
            BallCheckOutcome ball = ball_nonzero_check(spec.hash(), target_d);
            report.ball_check_max_weight = target_d - 1;
            report.add("ball_nonzero", ball.pass,
                       "radius " + std::to_string(target_d - 1));
            if (!ball.pass) report.counterexamples.push_back(*ball.counterexample);

            if (spec.info_length() <= 16) {
                uint32_t md = min_distance_bruteforce(spec);
                report.min_distance = md;
                report.add("min_distance", md >= target_d,
                           std::to_string(md) + " vs required " + std::to_string(target_d));
            } else {
                report.add("min_distance", true, "skipped: more than 2^16 codewords");
            }
        }

        std::optional<DistortionSet> D;
        std::string err;
        if (dist.any()) {
            D = dist.resolve(spec.message_length(), err);
            if (!D) { std::cerr << "error: " << err << "\n"; return kUsage; }
        } else if (auto desc = metadata_value(spec, "distortions")) {
            D = DistortionFlags::from_descriptor(*desc, spec.message_length());
        } else if (target_d >= 2 && spec.mode() == CodeMode::correct) {
            D = DistortionSet::weight_ball(spec.message_length(), (target_d - 1) / 2);
        } else if (target_d >= 2) {
            D = DistortionSet::weight_ball(spec.message_length(), target_d - 1);
        }

        if (D) {
            if (lr.code->syndromes) {
                SyndromeBuild sb = build_syndrome_table(spec, *D);
                bool match = sb.ok() && *sb.table == *lr.code->syndromes;
                report.add("syndrome_table", match,
                           sb.ok() ? (match ? std::to_string(sb.table->size()) + " distinct syndromes"
                                            : "stored table does not match the distortion set")
                                   : sb.message);
            }
            VerificationReport fuzz = fuzz_roundtrip(spec, *D, trials, seed, exhaustive);
            for (auto& c : fuzz.checks) report.checks.push_back(std::move(c));
            for (auto& w : fuzz.counterexamples) report.counterexamples.push_back(std::move(w));
            report.exhaustive = fuzz.exhaustive;
        } else if (target_d < 2) {
            std::cerr << "error: nothing to verify; pass --d or a distortion model\n";
            return kUsage;
        }
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }

    std::cout << (machine ? report.to_key_value() : report.to_text());
    return report.all_passed() ? kOk : kVerifyFailed;
}

int run_bounds(uint32_t L, uint32_t d, uint32_t delta) {
    if (L < 2 || d < 2 || d > L) {
        std::cerr << "error: need 2 <= d <= L\n";
        return kUsage;
    }
    std::cout << "L=" << L << " d=" << d << "\n";
    std::cout << "vg_bound=" << vg_bound(L, d).to_string() << "\n";
    auto l_vg = check_bits_vg(L, d);
    auto l_imp = check_bits_improved(L, d);
    std::cout << "l_vg=" << (l_vg ? std::to_string(*l_vg) : "none") << "\n";
    std::cout << "l_improved=" << (l_imp ? std::to_string(*l_imp) : "none") << "\n";
    std::cout << "zsize=" << zsize_formula(L, d).to_string() << "\n";
    std::cout << "improvement=" << (l_vg && l_imp && *l_imp < *l_vg ? "yes" : "no") << "\n";
    if (d < L) {
        Pow2Rational bound = success_bound(L, d, delta);
        std::cout << "success_bound(delta=" << delta << ")=" << bound.to_string()
                  << " (~" << bound.to_double() << ")\n";
    }
    return kOk;
}

int run_simulate(const std::string& code_path, const DistortionFlags& dist, uint64_t frames,
                 double error_prob, uint64_t seed) {
    LoadResult lr = load_code(code_path);
    if (!lr.ok()) {
        std::cerr << "error: " << code_path << ": " << lr.error->message << "\n";
        return kUsage;
    }
    const CodeSpec& spec = lr.code->spec;

    std::optional<DistortionSet> D;
    std::string err;
    if (dist.any()) {
        D = dist.resolve(spec.message_length(), err);
    } else if (auto desc = metadata_value(spec, "distortions")) {
        D = DistortionFlags::from_descriptor(*desc, spec.message_length());
        if (!D) err = "cannot reconstruct distortion set from metadata; pass a model";
    } else {
        err = "no distortion model given";
    }
    if (!D) { std::cerr << "error: " << err << "\n"; return kUsage; }

    if (error_prob < 0.0 || error_prob > 1.0) {
        std::cerr << "error: --error-prob must be in [0,1]\n";
        return kUsage;
    }

    const SyndromeTable* table = nullptr;
    std::optional<SyndromeTable> fresh;
    if (spec.mode() == CodeMode::correct) {
        if (lr.code->syndromes && dist.any() == false) {
            table = &*lr.code->syndromes;
        } else {
            SyndromeBuild sb = build_syndrome_table(spec, *D);
            if (!sb.ok()) { std::cerr << "error: " << sb.message << "\n"; return kVerifyFailed; }
            fresh = std::move(*sb.table);
            table = &*fresh;
        }
    }

    SimulationCounts counts = simulate_channel(spec, *D, table, frames, error_prob, seed);
    std::cout << counts.to_text();
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"error-detection and correction codes from linear hash functions over GF(2)"};
    app.require_subcommand(1);

    // build
    auto* build = app.add_subcommand("build", "construct a code and write it to a file");
    std::string mode = "detect", out_path;
    uint32_t L = 0, d = 0, delta = 0;
    int algorithm = 0;
    std::optional<uint64_t> seed_opt;
    uint64_t seed_val = 0;
    DistortionFlags build_dist;
    build->add_option("--mode", mode, "detect or correct")
        ->check(CLI::IsMember({"detect", "correct"}))
        ->required();
    build->add_option("--L", L, "message length in bits");
    auto* dopt = build->add_option("--d", d, "target minimum distance (bounded-weight constructors)");
    build->add_option("--algorithm", algorithm, "1 (VG), 2 (improved) or 3 (randomised)")->needs(dopt);
    build->add_option("--delta", delta, "extra check bits for algorithm 3");
    auto* seed_flag = build->add_option("--seed", seed_val, "seed for algorithm 3");
    build_dist.attach(build);
    build->add_option("--out", out_path, "output code file")->required();

    // encode / decode
    auto* enc = app.add_subcommand("encode", "encode info frames with a code file");
    auto* dec = app.add_subcommand("decode", "decode received frames with a code file");
    std::string code_path, in_path, file_out, format = "text", log_path;
    for (CLI::App* c : {enc, dec}) {
        c->add_option("--code", code_path, "code file from build")->required();
        c->add_option("--in", in_path, "input file")->required();
        c->add_option("--out", file_out, "output file")->required();
        c->add_option("--format", format, "frame encoding: text ('0'/'1' digits) or bits (raw, MSB first)")
            ->check(CLI::IsMember({"text", "bits"}));
    }
    dec->add_option("--log", log_path, "correction log destination (default stderr)");

    // verify
    auto* ver = app.add_subcommand("verify", "run the brute-force oracles against a code file");
    std::string ver_code;
    uint32_t ver_d = 0;
    bool exhaustive = false, machine = false;
    uint64_t trials = 20000, ver_seed = 1;
    DistortionFlags ver_dist;
    ver->add_option("--code", ver_code, "code file")->required();
    ver->add_option("--d", ver_d, "distance to certify (defaults to the file's metadata)");
    ver_dist.attach(ver);
    ver->add_flag("--exhaustive", exhaustive, "insist on covering the whole product space");
    ver->add_option("--trials", trials, "sample count when not exhaustive");
    ver->add_option("--seed", ver_seed, "seed for sampled verification");
    ver->add_flag("--machine", machine, "key=value output");

    // bounds
    auto* bnd = app.add_subcommand("bounds", "print the bound table for (L, d)");
    uint32_t bL = 0, bd = 0, bdelta = 0;
    bnd->add_option("--L", bL, "message length")->required();
    bnd->add_option("--d", bd, "minimum distance")->required();
    bnd->add_option("--delta", bdelta, "extra check bits for the randomised bound");

    // simulate
    auto* sim = app.add_subcommand("simulate", "push random frames through the channel model");
    std::string sim_code;
    uint64_t sim_frames = 1000, sim_seed = 0;
    double error_prob = 0.5;
    DistortionFlags sim_dist;
    bool sim_seed_set = false;
    sim->add_option("--code", sim_code, "code file")->required();
    sim_dist.attach(sim);
    sim->add_option("--frames", sim_frames, "number of frames");
    sim->add_option("--error-prob", error_prob, "per-frame corruption probability");
    sim->add_option("--seed", sim_seed, "seed (required: runs are reproducible)")
        ->each([&](const std::string&) { sim_seed_set = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (build->parsed()) {
            if (seed_flag->count() > 0) seed_opt = seed_val;
            if ((d > 0) == build_dist.any()) {
                std::cerr << "error: pass exactly one of --d or a distortion model\n";
                return kUsage;
            }
            if (d > 0 && algorithm == 0) algorithm = 1;
            return run_build(L, d, mode, algorithm, delta, seed_opt, build_dist, out_path);
        }
        if (enc->parsed()) return run_encode(code_path, in_path, file_out, format);
        if (dec->parsed()) return run_decode(code_path, in_path, file_out, format, log_path);
        if (ver->parsed()) return run_verify(ver_code, ver_d, ver_dist, exhaustive, trials, ver_seed, machine);
        if (bnd->parsed()) return run_bounds(bL, bd, bdelta);
        if (sim->parsed()) {
            if (!sim_seed_set) {
                std::cerr << "error: simulate requires --seed\n";
                return kUsage;
            }
            return run_simulate(sim_code, sim_dist, sim_frames, error_prob, sim_seed);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
