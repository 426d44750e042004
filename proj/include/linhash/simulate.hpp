#pragma once

#include <cstdint>
#include <sstream>
#include <string>

#include "linhash/codec.hpp"
#include "linhash/distortions.hpp"
#include "linhash/rng.hpp"

namespace linhash {

struct SimulationCounts {
    uint64_t frames = 0;
    uint64_t corrupted = 0;
    uint64_t detected = 0;
    uint64_t missed = 0;         // corrupted frames with a zero syndrome
    uint64_t corrected = 0;      // correct mode only
    uint64_t uncorrectable = 0;  // correct mode only

    std::string to_text() const {
        std::ostringstream out;
        out << "frames=" << frames << "\ncorrupted=" << corrupted
            << "\ndetected=" << detected << "\nmissed=" << missed
            << "\ncorrected=" << corrected << "\nuncorrectable=" << uncorrectable << "\n";
        return out.str();
    }
};

/// Random info frames through the channel model: with probability error_prob
/// a uniformly chosen distortion is XORed onto the codeword. The distortion
/// set need not be the one the code was built for; out-of-model errors can
/// show up as misses, which are reported, not failed. Deterministic per seed.
inline SimulationCounts simulate_channel(const CodeSpec& spec, const DistortionSet& D,
                                         const SyndromeTable* table, uint64_t frames,
                                         double error_prob, uint64_t seed) {
    if (D.length() != spec.message_length())
        throw std::invalid_argument("simulate_channel: distortion length mismatch");
    if (spec.mode() == CodeMode::correct && table == nullptr)
        throw std::invalid_argument("simulate_channel: correct mode needs a syndrome table");

    Rng rng(seed);
    SimulationCounts counts;
    counts.frames = frames;
    for (uint64_t i = 0; i < frames; ++i) {
        BitWord info = rng.word(spec.info_length());
        BitWord x = encode(spec, info);
        bool corrupt = rng.coin(error_prob);
        BitWord y = corrupt ? x ^ D.members()[rng.index(D.size())] : x;
        if (corrupt) ++counts.corrupted;

        if (spec.mode() == CodeMode::detect) {
            DetectOutcome out = detect(spec, y);
            if (!out.clean) ++counts.detected;
            else if (corrupt) ++counts.missed;
        } else {
            CorrectOutcome out = correct(spec, *table, y);
            if (out.kind != CorrectOutcome::Kind::clean) ++counts.detected;
            else if (corrupt) ++counts.missed;
            if (out.kind == CorrectOutcome::Kind::corrected) ++counts.corrected;
            if (out.kind == CorrectOutcome::Kind::uncorrectable) ++counts.uncorrectable;
        }
    }
    return counts;
}

}  // namespace linhash
