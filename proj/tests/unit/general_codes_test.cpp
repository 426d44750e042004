#include <doctest.h>

#include "linhash/general_codes.hpp"
#include "linhash/rng.hpp"
#include "../support/test_util.hpp"

using namespace linhash;
using testutil::words;

TEST_CASE("burst detector reproduces the alternating table") {
    auto D = DistortionSet::burst(6, 2, BurstVariant::strict);
    GeneralBuild res = construct_detector(D);
    REQUIRE(res.ok());
    CHECK(res.result->hash.hash_length() == 1);
    CHECK(res.result->derived_stat == 1);  // max |D'_i|
    std::vector<std::string> got;
    for (const BitWord& v : res.result->hash.table()) got.push_back(v.to_string());
    CHECK(got == std::vector<std::string>{"1", "0", "1", "0", "1", "0"});
    CHECK(res.result->check_positions == std::vector<uint32_t>{1});
    for (const BitWord& d : D.members()) CHECK(res.result->hash.eval(d).to_string() == "1");
}

TEST_CASE("single-flip detector degenerates to parity") {
    auto D = DistortionSet::weight_ball(9, 1);
    GeneralBuild res = construct_detector(D);
    REQUIRE(res.ok());
    CHECK(res.result->hash.hash_length() == 1);
    for (uint32_t i = 1; i <= 9; ++i) CHECK(res.result->hash.column(i).to_string() == "1");
}

TEST_CASE("detector reports no solution when l reaches L") {
    // All seven nonzero words of length 3: |D'_3| = 4 needs l = 3 = L.
    std::vector<BitWord> all;
    for (uint32_t m = 1; m < 8; ++m) {
        BitWord w(3);
        for (uint32_t j = 0; j < 3; ++j)
            if ((m >> j) & 1) w.set_bit(j + 1, true);
        all.push_back(w);
    }
    GeneralBuild res = construct_detector(DistortionSet::explicit_list(3, all));
    CHECK(res.status == ConstructStatus::no_solution);
}

TEST_CASE("detector postcondition holds on random sets") {
    Rng rng(31);
    for (int t = 0; t < 12; ++t) {
        uint32_t L = 6 + t % 5;
        std::vector<BitWord> members;
        WordSet seen;
        for (int i = 0; i < 10; ++i) {
            BitWord w = rng.word(L);
            if (!w.is_zero() && seen.insert(w).second) members.push_back(w);
        }
        GeneralBuild res = construct_detector(DistortionSet::explicit_list(L, members));
        if (!res.ok()) continue;
        for (const BitWord& d : members) CHECK_FALSE(res.result->hash.eval(d).is_zero());
    }
}

TEST_CASE("burst corrector, deterministic choice rule") {
    auto D = DistortionSet::burst(6, 2, BurstVariant::strict);
    GeneralBuild res = construct_corrector(D);
    REQUIRE(res.ok());
    CHECK(res.result->hash.hash_length() == 4);  // 2^4 - 1 >= |F_5| = 8
    CHECK(res.result->derived_stat == 8);
    // Regression golden for the weight-lex choice order.
    std::vector<std::string> got;
    for (const BitWord& v : res.result->hash.table()) got.push_back(v.to_string());
    CHECK(got == std::vector<std::string>{"1000", "0100", "0010", "0001", "1000", "0010"});
    WordSet syndromes;
    for (const BitWord& d : D.members()) {
        BitWord s = res.result->hash.eval(d);
        CHECK_FALSE(s.is_zero());
        CHECK(syndromes.insert(s).second);
    }
}

TEST_CASE("burst corrector replaying a caller.s choices") {
    auto D = DistortionSet::burst(6, 2, BurstVariant::strict);
    GeneralBuild res = construct_corrector(
        D, {{5, BitWord::from_string("1111")}, {6, BitWord::from_string("1000")}});
    REQUIRE(res.ok());
    std::vector<std::string> got;
    for (const BitWord& v : res.result->hash.table()) got.push_back(v.to_string());
    CHECK(got == std::vector<std::string>{"1000", "0100", "0010", "0001", "1111", "1000"});

    auto syndrome = [&](const char* d) { return res.result->hash.eval(BitWord::from_string(d)).to_string(); };
    CHECK(syndrome("000011") == "0111");
    CHECK(syndrome("000110") == "1110");
    CHECK(syndrome("001100") == "0011");
    CHECK(syndrome("011000") == "0110");
    CHECK(syndrome("110000") == "1100");
}

TEST_CASE("inadmissible overrides are rejected") {
    auto D = DistortionSet::burst(6, 2, BurstVariant::strict);
    // 0001 is lambda(F_5)-taken: it is the image of 000100.
    CHECK_THROWS_AS(construct_corrector(D, {{5, BitWord::from_string("0001")}}),
                    std::invalid_argument);
}

TEST_CASE("corrector for a single pattern") {
    auto D = DistortionSet::explicit_list(4, words({"0110"}));
    CorrectionSets cs = correction_sets(D);
    GeneralBuild res = construct_corrector(D);
    REQUIRE(res.ok());
    uint32_t l = res.result->hash.hash_length();
    CHECK((uint64_t{1} << l) - 1 >= cs.max_f_size());
    CHECK((uint64_t{1} << (l - 1)) - 1 < cs.max_f_size());  // smallest such l
    CHECK_FALSE(res.result->hash.eval(BitWord::from_string("0110")).is_zero());
}

TEST_CASE("single-error corrector at L = 7 needs three check bits") {
    auto D = DistortionSet::weight_ball(7, 1);
    CorrectionSets cs = correction_sets(D);
    CHECK(cs.max_f_size() == 7);  // F_i = G_{i-1} for these sets
    GeneralBuild res = construct_corrector(D);
    REQUIRE(res.ok());
    CHECK(res.result->hash.hash_length() == 3);
    WordSet syndromes;
    syndromes.insert(BitWord::zero(3));
    for (const BitWord& d : D.members()) CHECK(syndromes.insert(res.result->hash.eval(d)).second);
}
