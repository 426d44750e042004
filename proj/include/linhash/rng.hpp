#pragma once

#include <cstdint>
#include <random>

#include "linhash/bitword.hpp"

namespace linhash {

/// Seeded deterministic bit source. All randomness in the library flows
/// through this wrapper, which consumes raw mt19937_64 outputs only;
/// std::*_distribution results are implementation-defined and would not
/// reproduce across platforms.
///
/// Words are filled storage-word by storage-word, low positions first, with
/// the final partial word masked; this fill order is part of the
/// reproducibility contract ("mt19937_64/word-fill-v1").
class Rng {
public:
    static constexpr const char* kAlgorithmId = "mt19937_64/word-fill-v1";

    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next() { return engine_(); }

    BitWord word(uint32_t length) {
        BitWord w(length);
        for (uint32_t pos = 1; pos <= length; pos += 64) {
            uint64_t bits = engine_();
            uint32_t count = length - pos + 1 < 64 ? length - pos + 1 : 64;
            if (count < 64) bits &= (uint64_t{1} << count) - 1;
            for (uint32_t b = 0; b < count; ++b)
                if ((bits >> b) & 1) w.set_bit(pos + b, true);
        }
        return w;
    }

    /// True with probability p, via the top 53 bits of one engine output.
    bool coin(double p) {
        double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return u < p;
    }

    /// Uniform index in [0, n). n must be positive.
    size_t index(size_t n) { return static_cast<size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

}  // namespace linhash
