#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linhash/bignum.hpp"
#include "linhash/bitword.hpp"
#include "linhash/bounded_weight.hpp"
#include "linhash/codec.hpp"
#include "linhash/distortions.hpp"
#include "linhash/rng.hpp"

namespace linhash {

struct VerificationReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };

    std::vector<Check> checks;
    std::optional<uint32_t> min_distance;
    std::optional<uint32_t> ball_check_max_weight;
    std::vector<BitWord> counterexamples;  // nonempty iff some check failed
    bool exhaustive = false;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }

    std::string to_text() const {
        std::ostringstream out;
        for (const auto& c : checks) {
            out << "check " << c.name << ": " << (c.pass ? "pass" : "FAIL");
            if (!c.detail.empty()) out << " (" << c.detail << ")";
            out << "\n";
        }
        if (min_distance) out << "min_distance: " << *min_distance << "\n";
        for (const BitWord& w : counterexamples)
            out << "counterexample: " << w.to_string() << "\n";
        out << "result: " << (all_passed() ? "PASS" : "FAIL") << "\n";
        return out.str();
    }

    std::string to_key_value() const {
        std::ostringstream out;
        for (const auto& c : checks)
            out << "check." << c.name << "=" << (c.pass ? "pass" : "fail") << "\n";
        if (min_distance) out << "min_distance=" << *min_distance << "\n";
        if (ball_check_max_weight) out << "ball_check_max_weight=" << *ball_check_max_weight << "\n";
        out << "exhaustive=" << (exhaustive ? "1" : "0") << "\n";
        for (const BitWord& w : counterexamples) out << "counterexample=" << w.to_string() << "\n";
        out << "result=" << (all_passed() ? "pass" : "fail") << "\n";
        return out.str();
    }
};

struct BallCheckOutcome {
    bool pass;
    std::optional<BitWord> counterexample;
};

/// The distance criterion, run exhaustively: the hash must be nonzero on the
/// whole radius-(d-1) ball minus the origin. Passing is equivalent to the
/// encoding set having minimum distance >= d. Fails loudly on instances too
/// large to stream rather than silently sampling.
inline BallCheckOutcome ball_nonzero_check(const LinearHashFunction& h, uint32_t d) {
    if (d < 2) throw std::invalid_argument("ball_nonzero_check: need d >= 2");
    uint32_t radius = std::min(d - 1, h.message_length());
    if (ball_size_sum(h.message_length(), radius) > BigUint(uint64_t{1} << 24))
        throw std::length_error("ball_nonzero_check: ball too large to stream");
    auto bad = find_ball_counterexample(h, d);
    return {!bad.has_value(), bad};
}

/// Minimum Hamming distance of the encoding set, by enumerating every
/// codeword. Computed twice, as the pairwise minimum and as the minimum
/// nonzero codeword weight (the two agree on a linear code); disagreement
/// means a broken oracle and throws.
inline uint32_t min_distance_bruteforce(const CodeSpec& spec) {
    const uint32_t k = spec.info_length();
    if (k > 16) throw std::length_error("min_distance_bruteforce: more than 2^16 codewords");

    const uint64_t count = uint64_t{1} << k;
    std::vector<BitWord> codewords;
    codewords.reserve(count);
    for (uint64_t m = 0; m < count; ++m) {
        BitWord info(k);
        for (uint32_t j = 0; j < k; ++j)
            if ((m >> j) & 1) info.set_bit(j + 1, true);
        codewords.push_back(encode(spec, info));
    }

    uint32_t min_weight = spec.message_length();
    for (uint64_t m = 1; m < count; ++m)
        min_weight = std::min(min_weight, codewords[m].weight());

    uint32_t min_pair = spec.message_length();
    if (spec.message_length() <= 64) {
        std::vector<uint64_t> raw(count);
        for (uint64_t m = 0; m < count; ++m) raw[m] = codewords[m].word_at(0);
        for (uint64_t a = 0; a < count; ++a)
            for (uint64_t b = a + 1; b < count; ++b) {
                uint32_t dist = static_cast<uint32_t>(__builtin_popcountll(raw[a] ^ raw[b]));
                if (dist < min_pair) min_pair = dist;
            }
    } else {
        for (uint64_t a = 0; a < count; ++a)
            for (uint64_t b = a + 1; b < count; ++b)
                min_pair = std::min(min_pair, hamming_distance(codewords[a], codewords[b]));
    }

    if (min_pair != min_weight)
        throw std::logic_error("min_distance_bruteforce: pairwise and weight oracles disagree");
    return min_pair;
}

/// Guaranteed-achievable code size for length L and minimum distance d:
/// 2^(L - ceil(log2(1 + sum_{i=0}^{d-2} C(L-1, i)))). Exact.
inline BigUint vg_bound(uint32_t L, uint32_t d) {
    if (L < 2 || d < 2 || d > L) throw std::invalid_argument("vg_bound: need 2 <= d <= L");
    BigUint s = ball_size_sum(L - 1, d - 2);
    s += BigUint(1);
    return BigUint::pow2(L - ceil_log2(s));
}

/// Round-trips (info, distortion) pairs through the codec. Detection codes
/// must flag every corrupted frame and pass every clean one; correction codes
/// must recover the exact codeword and distortion. Covers the full product
/// space when it fits into `trials`, otherwise samples `trials` seeded cases.
inline VerificationReport fuzz_roundtrip(const CodeSpec& spec, const DistortionSet& D,
                                         uint64_t trials, uint64_t seed,
                                         bool force_exhaustive = false) {
    if (D.length() != spec.message_length())
        throw std::invalid_argument("fuzz_roundtrip: distortion length mismatch");
    VerificationReport report;

    std::optional<SyndromeTable> table;
    if (spec.mode() == CodeMode::correct) {
        SyndromeBuild built = build_syndrome_table(spec, D);
        if (!built.ok()) {
            report.add("syndrome_injective", false, built.message);
            if (built.collision) {
                report.counterexamples.push_back(built.collision->first);
                report.counterexamples.push_back(built.collision->second);
            }
            return report;
        }
        table = std::move(*built.table);
        report.add("syndrome_injective", true, std::to_string(table->size()) + " syndromes");
    }

    const uint32_t k = spec.info_length();
    const uint64_t cases = D.size() + 1;  // one extra for the clean frame
    bool exhaustive = false;
    if (k < 63) {
        unsigned __int128 product = static_cast<unsigned __int128>(uint64_t{1} << k) * cases;
        exhaustive = product <= trials;
        if (force_exhaustive) {
            if (product > (uint64_t{1} << 24))
                throw std::length_error("fuzz_roundtrip: exhaustive space too large");
            exhaustive = true;
        }
    } else if (force_exhaustive) {
        throw std::length_error("fuzz_roundtrip: exhaustive space too large");
    }
    report.exhaustive = exhaustive;

    Rng rng(seed);
    uint64_t ran = 0;
    bool pass = true;
    std::string fail_detail;

    auto run_case = [&](const BitWord& info, const BitWord* d) {
        if (!pass) return;
        ++ran;
        BitWord x = encode(spec, info);
        BitWord y = d ? x ^ *d : x;
        if (spec.mode() == CodeMode::detect) {
            DetectOutcome out = detect(spec, y);
            if (d ? out.clean : !out.clean) {
                pass = false;
                fail_detail = d ? "missed distortion " + d->to_string() : "false alarm";
                report.counterexamples.push_back(y);
            }
        } else {
            CorrectOutcome out = correct(spec, *table, y);
            bool good = d ? (out.kind == CorrectOutcome::Kind::corrected &&
                             *out.codeword == x && *out.distortion == *d)
                          : out.kind == CorrectOutcome::Kind::clean;
            if (!good) {
                pass = false;
                fail_detail = d ? "failed to recover from " + d->to_string() : "clean frame mangled";
                report.counterexamples.push_back(y);
            }
        }
    };

    if (exhaustive) {
        const uint64_t count = uint64_t{1} << k;
        for (uint64_t m = 0; m < count && pass; ++m) {
            BitWord info(k);
            for (uint32_t j = 0; j < k; ++j)
                if ((m >> j) & 1) info.set_bit(j + 1, true);
            run_case(info, nullptr);
            for (const BitWord& d : D.members()) run_case(info, &d);
        }
    } else {
        for (uint64_t t = 0; t < trials && pass; ++t) {
            BitWord info = rng.word(k);
            size_t pick = rng.index(cases);
            run_case(info, pick == D.size() ? nullptr : &D.members()[pick]);
        }
    }

    report.add(spec.mode() == CodeMode::detect ? "roundtrip_detect" : "roundtrip_correct",
               pass,
               pass ? std::to_string(ran) + (exhaustive ? " cases, exhaustive" : " cases, sampled")
                    : fail_detail);
    return report;
}

}  // namespace linhash
