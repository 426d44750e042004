#include <doctest.h>

#include <algorithm>
#include <set>

#include "linhash/bitword.hpp"
#include "linhash/rng.hpp"
#include "../support/test_util.hpp"

using namespace linhash;
using testutil::pascal_ball_sum;

TEST_CASE("unit words") {
    CHECK(BitWord::unit(6, 0).to_string() == "000000");
    CHECK(BitWord::unit(6, 2).to_string() == "010000");
    CHECK(BitWord::unit(3, 3).to_string() == "001");
    CHECK_THROWS_AS(BitWord::unit(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(BitWord(0), std::invalid_argument);
}

TEST_CASE("xor matches the worked transmissions") {
    CHECK((BitWord::from_string("01010") ^ BitWord::from_string("11100")).to_string() == "10110");
    CHECK((BitWord::from_string("111110") ^ BitWord::from_string("011000")).to_string() == "100110");
    BitWord w = BitWord::from_string("10110");
    CHECK((w ^ w).is_zero());
    CHECK_THROWS_AS(BitWord::from_string("01") ^ BitWord::from_string("011"), std::invalid_argument);
}

TEST_CASE("weight and distance") {
    CHECK(BitWord::from_string("000000").weight() == 0);
    CHECK(BitWord::from_string("011000").weight() == 2);
    CHECK(BitWord::from_string("111110").weight() == 5);
    CHECK(hamming_distance(BitWord::from_string("01010"), BitWord::from_string("11100")) == 3);
}

TEST_CASE("string parsing") {
    CHECK(BitWord::from_string("011000").bit(2));
    CHECK_FALSE(BitWord::from_string("011000").bit(1));
    CHECK_FALSE(BitWord::try_parse("01x0").has_value());
    CHECK_FALSE(BitWord::try_parse("").has_value());
    for (const char* s : {"0", "1", "0101101", "000"})
        CHECK(BitWord::from_string(s).to_string() == s);
}

TEST_CASE("last_set_bit and prefix truncation") {
    CHECK(BitWord::from_string("011000").last_set_bit() == 3);
    CHECK(BitWord::from_string("000001").last_set_bit() == 6);
    CHECK(BitWord::zero(6).last_set_bit() == 0);
    CHECK(BitWord::from_string("011011").prefix(4).to_string() == "011000");
    CHECK(BitWord::from_string("011011").prefix(6).to_string() == "011011");
    CHECK(BitWord::from_string("011011").prefix(0).is_zero());
}

TEST_CASE("ball stream goldens") {
    BallStream b(4, 1);
    std::vector<std::string> got;
    while (auto w = b.next()) got.push_back(w->to_string());
    CHECK(got == std::vector<std::string>{"0000", "1000", "0100", "0010", "0001"});

    BallStream narrow(6, 1, 2);  // support confined to the first two positions
    got.clear();
    while (auto w = narrow.next()) got.push_back(w->to_string());
    CHECK(got == std::vector<std::string>{"000000", "100000", "010000"});

    size_t n = 0;
    BallStream full(6, 2);
    while (full.next()) ++n;
    CHECK(n == 22);  // C(6,0) + C(6,1) + C(6,2)
}

TEST_CASE("ball stream properties") {
    for (uint32_t m : {5u, 9u, 12u}) {
        for (uint32_t n = 0; n <= m; n += 2) {
            for (uint32_t sup : {m, m / 2 == 0 ? 1u : m / 2}) {
                std::vector<BitWord> first, second;
                BallStream a(m, n, sup), b(m, n, sup);
                while (auto w = a.next()) first.push_back(*w);
                while (auto w = b.next()) second.push_back(*w);
                CHECK(first == second);  // stable order across runs

                bool size_matches = static_cast<testutil::u128>(first.size()) ==
                                    pascal_ball_sum(sup, std::min(n, sup));
                CHECK(size_matches);
                std::set<std::string> seen;
                for (size_t i = 0; i < first.size(); ++i) {
                    CHECK(first[i].weight() <= n);
                    CHECK(first[i].last_set_bit() <= sup);
                    CHECK(seen.insert(first[i].to_string()).second);
                    if (i > 0) CHECK(weight_lex_less(first[i - 1], first[i]));
                }
            }
        }
    }
}

TEST_CASE("xor algebra") {
    Rng rng(7);
    for (uint32_t len : {9u, 64u, 100u}) {
        BitWord z(len);
        for (int t = 0; t < 40; ++t) {
            BitWord a = rng.word(len), b = rng.word(len), c = rng.word(len);
            CHECK(((a ^ b) ^ c) == (a ^ (b ^ c)));
            CHECK((a ^ b) == (b ^ a));
            CHECK((a ^ a) == z);
            CHECK((a ^ z) == a);
        }
    }
}

TEST_CASE("words longer than one machine word") {
    BitWord w = BitWord::unit(100, 65);
    CHECK(w.weight() == 1);
    CHECK(w.last_set_bit() == 65);
    CHECK(w.bit(65));
    CHECK(w.to_string().size() == 100);
    BitWord v = BitWord::unit(100, 1) ^ w;
    CHECK(v.weight() == 2);
    CHECK(v.prefix(64) == BitWord::unit(100, 1));
    CHECK(BitWord::from_string(v.to_string()) == v);

    size_t n = 0;
    BallStream ball(70, 1);
    while (ball.next()) ++n;
    CHECK(n == 71);
}

TEST_CASE("weight_lex_less orders supports lexicographically") {
    auto lt = [](const char* a, const char* b) {
        return weight_lex_less(BitWord::from_string(a), BitWord::from_string(b));
    };
    CHECK(lt("0000", "1000"));   // weight first
    CHECK(lt("1000", "0100"));   // support {1} before {2}
    CHECK(lt("1100", "1010"));
    CHECK(lt("1001", "0110"));   // {1,4} before {2,3}
    CHECK_FALSE(lt("0110", "1001"));
    CHECK_FALSE(lt("1000", "1000"));
}
