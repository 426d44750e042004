#include <doctest.h>

#include "linhash/bignum.hpp"
#include "../support/test_util.hpp"

using namespace linhash;
using testutil::pascal_binomial;
using testutil::u128_to_string;

TEST_CASE("binomials agree with a Pascal triangle") {
    for (unsigned n = 0; n <= 64; ++n)
        for (unsigned k = 0; k <= n; k += (n > 20 ? 5 : 1))
            CHECK(binomial(n, k).to_string() == u128_to_string(pascal_binomial(n, k)));
    CHECK(binomial(5, 9).is_zero());
}

TEST_CASE("arithmetic basics") {
    BigUint a(0xffffffffffffffffULL);
    BigUint b = a + a;
    CHECK(b.to_string() == "36893488147419103230");
    CHECK((b - a) == a);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS(BigUint(1) - BigUint(2), std::underflow_error);

    CHECK(BigUint::pow2(100).to_string() == "1267650600228229401496703205376");
    CHECK(BigUint::pow2(0).to_string() == "1");
    CHECK((BigUint(123456789) * BigUint(987654321)).to_string() == "121932631112635269");

    BigUint c(1000000007);
    c.mul_small(1000000009);
    CHECK(c.to_string() == "1000000016000000063");
    CHECK(c.div_small(1000000009) == 0);
    CHECK(c.to_string() == "1000000007");
}

TEST_CASE("bit_length and ceil_log2") {
    CHECK(BigUint(0).bit_length() == 0);
    CHECK(BigUint(1).bit_length() == 1);
    CHECK(BigUint(255).bit_length() == 8);
    CHECK(BigUint(256).bit_length() == 9);
    CHECK(BigUint::pow2(77).bit_length() == 78);

    CHECK(ceil_log2(BigUint(1)) == 0);
    CHECK(ceil_log2(BigUint(2)) == 1);
    CHECK(ceil_log2(BigUint(3)) == 2);
    CHECK(ceil_log2(BigUint(4)) == 2);
    CHECK(ceil_log2(BigUint(5)) == 3);
    for (uint32_t k = 1; k <= 90; k += 13) {
        CHECK(ceil_log2(BigUint::pow2(k)) == k);
        CHECK(ceil_log2(BigUint::pow2(k) + BigUint(1)) == k + 1);
    }
}

TEST_CASE("comparisons") {
    CHECK(BigUint(5) < BigUint(6));
    CHECK(BigUint::pow2(64) > BigUint(0xffffffffffffffffULL));
    CHECK(BigUint(42) == BigUint(42));
    CHECK(BigUint(42).to_u64() == 42);
    CHECK_THROWS_AS(BigUint::pow2(70).to_u64(), std::overflow_error);
}

TEST_CASE("power-of-two rationals") {
    Pow2Rational r{BigUint(30688), 15};  // 30688 / 32768
    CHECK(r.to_string() == "959/1024");
    CHECK(r.to_double() == 0.9365234375);  // dyadic, exactly representable

    Pow2Rational half{BigUint(1), 1}, quarter{BigUint(1), 2};
    CHECK(half.compare(quarter) > 0);
    CHECK(quarter.compare(half) < 0);
    CHECK(half.compare(Pow2Rational{BigUint(2), 2}) == 0);
    CHECK(Pow2Rational::zero().to_string() == "0");
    CHECK(Pow2Rational{BigUint(8), 3}.to_string() == "1");
}
