#include <doctest.h>

#include "linhash/simulate.hpp"
#include "linhash/verify.hpp"
#include "../support/test_util.hpp"

using namespace linhash;

TEST_CASE("in-model simulation never misses") {
    auto det = construct_detector(DistortionSet::burst(6, 2, BurstVariant::strict));
    CodeSpec spec = spec_from_general(*det.result);
    auto D = DistortionSet::burst(6, 2, BurstVariant::strict);

    SimulationCounts counts = simulate_channel(spec, D, nullptr, 20000, 0.3, 42);
    CHECK(counts.frames == 20000);
    CHECK(counts.missed == 0);
    CHECK(counts.detected == counts.corrupted);
    CHECK(counts.corrupted > 4000);  // ~0.3 of the frames

    SimulationCounts again = simulate_channel(spec, D, nullptr, 20000, 0.3, 42);
    CHECK(again.corrupted == counts.corrupted);  // deterministic per seed
    SimulationCounts other = simulate_channel(spec, D, nullptr, 20000, 0.3, 43);
    CHECK(other.corrupted != counts.corrupted);
}

TEST_CASE("correction-mode simulation resolves every in-model frame") {
    auto res = construct_alg1({7, 3, 0, 0});
    CodeSpec spec = spec_from_bounded(*res.code, CodeMode::correct);
    auto D = DistortionSet::weight_ball(7, 1);
    SyndromeTable table = *build_syndrome_table(spec, D).table;

    SimulationCounts counts = simulate_channel(spec, D, &table, 5000, 0.5, 7);
    CHECK(counts.missed == 0);
    CHECK(counts.uncorrectable == 0);
    CHECK(counts.corrected == counts.corrupted);
}

TEST_CASE("out-of-model errors are reported, not failed") {
    // weight-3 patterns against a distance-3 detector: misses are possible
    // (any weight-3 word that lands in the code) and simply counted.
    auto res = construct_alg1({7, 3, 0, 0});
    CodeSpec spec = spec_from_bounded(*res.code, CodeMode::detect);
    auto heavy = DistortionSet::weight_ball(7, 3);

    SimulationCounts counts = simulate_channel(spec, heavy, nullptr, 20000, 0.8, 5);
    CHECK(counts.detected + counts.missed == counts.corrupted);
    CHECK(counts.missed > 0);  // weight-3 codewords exist in a distance-3 code
}

TEST_CASE("zero error probability is a clean channel") {
    auto det = construct_detector(DistortionSet::weight_ball(5, 1));
    CodeSpec spec = spec_from_general(*det.result);
    SimulationCounts counts =
        simulate_channel(spec, DistortionSet::weight_ball(5, 1), nullptr, 1000, 0.0, 1);
    CHECK(counts.corrupted == 0);
    CHECK(counts.detected == 0);
    CHECK(counts.missed == 0);
}
