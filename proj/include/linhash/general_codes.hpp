#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linhash/bignum.hpp"
#include "linhash/bitword.hpp"
#include "linhash/bounded_weight.hpp"
#include "linhash/distortions.hpp"
#include "linhash/hashfun.hpp"

namespace linhash {

enum class CodeMode { detect, correct };

inline const char* mode_name(CodeMode m) { return m == CodeMode::detect ? "detect" : "correct"; }

/// A hash function built for an explicit distortion set. Check symbols sit at
/// positions 1..l here, unlike the bounded-weight codes which carry them at
/// the end.
struct GeneralCodeResult {
    LinearHashFunction hash;
    std::vector<uint32_t> check_positions;  // {1, ..., l}
    CodeMode mode;
    uint64_t derived_stat = 0;         // max_i |D'_i| (detect) or max_i |F_i| (correct)
    bool verified_exhaustive = true;   // postcondition checked on all of D, or sampled
};

struct GeneralBuild {
    ConstructStatus status = ConstructStatus::ok;
    std::optional<GeneralCodeResult> result;
    std::string message;

    bool ok() const { return status == ConstructStatus::ok; }
};

namespace detail {

inline std::vector<uint32_t> iota_positions(uint32_t l) {
    std::vector<uint32_t> p(l);
    for (uint32_t i = 0; i < l; ++i) p[i] = i + 1;
    return p;
}

// Verification is exhaustive up to 2^20 distortions; past that every k-th
// member is checked and the result records the sampling.
constexpr size_t kVerifyExhaustiveLimit = size_t{1} << 20;

}  // namespace detail

/// Detection constructor: l is the smallest integer with 2^l - 1 >= max|D'_i|,
/// units go on the first l positions, and every later position takes the
/// smallest word outside the image of its D'_i. The result flags every
/// distortion in D: eval(d) != 0.
inline GeneralBuild construct_detector(const DistortionSet& D) {
    if (D.size() == 0) throw std::invalid_argument("construct_detector: empty distortion set");
    const uint32_t L = D.length();

    auto cleared = all_cleared_sets(D);
    size_t max_dprime = 0;
    for (uint32_t i = 1; i <= L; ++i) max_dprime = std::max(max_dprime, cleared[i].size());

    uint32_t l = ceil_log2(BigUint(max_dprime + 1));  // smallest l with 2^l - 1 >= max
    if (l == 0) l = 1;
    if (l >= L) return {ConstructStatus::no_solution, std::nullopt, "2^l - 1 >= max|D'_i| forces l >= L"};

    std::vector<BitWord> table;
    table.reserve(L);
    for (uint32_t i = 1; i <= L; ++i) {
        if (i <= l) {
            table.push_back(BitWord::unit(l, i));
            continue;
        }
        // D'_i members have support in 1..i-1, so the partial table covers them.
        WordSet taken;
        for (const BitWord& d : cleared[i]) {
            BitWord acc(l);
            d.for_each_set_bit([&](uint32_t pos) { acc ^= table[pos - 1]; });
            taken.insert(acc);
        }
        auto v = detail::smallest_absent(l, taken);
        if (!v) throw std::logic_error("construct_detector: choice set empty");
        table.push_back(*v);
    }

    GeneralCodeResult res{LinearHashFunction(L, l, std::move(table)),
                          detail::iota_positions(l), CodeMode::detect,
                          max_dprime, true};

    size_t stride = D.size() <= detail::kVerifyExhaustiveLimit
                        ? 1 : (D.size() + detail::kVerifyExhaustiveLimit - 1) / detail::kVerifyExhaustiveLimit;
    res.verified_exhaustive = stride == 1;
    const auto& members = D.members();
    for (size_t i = 0; i < members.size(); i += stride)
        if (res.hash.eval(members[i]).is_zero())
            throw std::logic_error("construct_detector: postcondition violated at " + members[i].to_string());

    return {ConstructStatus::ok, std::move(res), ""};
}

/// Correction constructor: l is the smallest integer with 2^l - 1 >= max|F_i|,
/// and each new value avoids the image of F_i, which makes the hash injective
/// on D u {0}. The optional overrides replay externally chosen values at
/// given steps; an inadmissible override is a caller error.
inline GeneralBuild construct_corrector(
    const DistortionSet& D,
    const std::vector<std::pair<uint32_t, BitWord>>& overrides = {}) {
    if (D.size() == 0) throw std::invalid_argument("construct_corrector: empty distortion set");
    const uint32_t L = D.length();

    CorrectionSets cs = correction_sets(D);
    size_t max_f = cs.max_f_size();

    uint32_t l = ceil_log2(BigUint(max_f + 1));
    if (l == 0) l = 1;
    if (l >= L) return {ConstructStatus::no_solution, std::nullopt, "2^l - 1 >= max|F_i| forces l >= L"};

    std::vector<BitWord> table;
    table.reserve(L);
    for (uint32_t i = 1; i <= L; ++i) {
        if (i <= l) {
            table.push_back(BitWord::unit(l, i));
            continue;
        }
        // Every f in F_i has a 0 at position i (h in H_i carries a 1 there),
        // so its image is determined by the columns already chosen.
        WordSet taken;
        for (const BitWord& f : cs.f[i]) {
            BitWord acc(l);
            f.for_each_set_bit([&](uint32_t pos) { acc ^= table[pos - 1]; });
            taken.insert(acc);
        }
        const BitWord* forced = nullptr;
        for (const auto& [step, word] : overrides)
            if (step == i) forced = &word;
        if (forced) {
            if (forced->length() != l || taken.count(*forced))
                throw std::invalid_argument("construct_corrector: override at step " +
                                            std::to_string(i) + " is not admissible");
            table.push_back(*forced);
        } else {
            auto v = detail::smallest_absent(l, taken);
            if (!v) throw std::logic_error("construct_corrector: choice set empty");
            table.push_back(*v);
        }
    }

    GeneralCodeResult res{LinearHashFunction(L, l, std::move(table)),
                          detail::iota_positions(l), CodeMode::correct,
                          max_f, true};

    // Injectivity on D+: no zero syndromes, no collisions.
    WordSet seen;
    seen.insert(BitWord::zero(l));
    D.for_each([&](const BitWord& d) {
        BitWord s = res.hash.eval(d);
        if (!seen.insert(s).second)
            throw std::logic_error("construct_corrector: syndrome clash at " + d.to_string());
    });

    return {ConstructStatus::ok, std::move(res), ""};
}

}  // namespace linhash
