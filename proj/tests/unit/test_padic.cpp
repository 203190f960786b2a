#include "arrexp/padic.hpp"
#include "arrexp/errors.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace arrexp;

TEST_CASE("valuation of integers", "[padic]") {
    CHECK(vp(Int(24), Int(2)) == 3);
    CHECK(vp(Int(24), Int(3)) == 1);
    CHECK(vp(Int(7), Int(5)) == 0);
    CHECK(vp(Int(-250), Int(5)) == 3);

    CHECK_THROWS_AS(vp(Int(0), Int(2)), ZeroInput);
    CHECK_THROWS_AS(vp(Int(12), Int(6)), NotPrime);
    CHECK_THROWS_AS(vp(Int(12), Int(1)), NotPrime);

    SECTION("total variant marks zero as infinite") {
        CHECK(valuation(Int(0), Int(3)).is_infinite());
        Valuation v = valuation(Int(18), Int(3));
        REQUIRE_FALSE(v.is_infinite());
        CHECK(*v.value == 2);
    }
}

TEST_CASE("valuation is additive on products", "[padic]") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<long long> nd(1, 100000);
    const Int primes[] = {Int(2), Int(3), Int(5), Int(7)};
    for (int trial = 0; trial < 40; ++trial) {
        Int a = nd(rng), b = nd(rng);
        for (const Int& p : primes)
            CHECK(vp(a * b, p) == vp(a, p) + vp(b, p));
    }
}

TEST_CASE("factorial valuation by direct summation", "[padic]") {
    // v_p(n!) = sum over k of floor(n / p^k)
    for (long long n : {4, 8, 9, 16, 25}) {
        for (long long p : {2LL, 3LL, 5LL}) {
            Int expected = 0;
            for (Int q = p; q <= n; q *= p) expected += Int(n) / q;
            CHECK(vp(factorial(n), Int(p)) == expected);
        }
    }
}

TEST_CASE("contiguous tuples minimize wronskian valuation", "[padic]") {
    CHECK(check_min_valuation(NNTuple({5, 4, 2, 0}), Int(2)));
    CHECK(check_min_valuation(NNTuple({9, 8, 7, 4}), Int(3)));
    CHECK(check_min_valuation(NNTuple({3, 2, 1, 0}), Int(2)));  // equality case

    SECTION("spot sweep over short tuples") {
        for (long long a = 2; a <= 8; ++a)
            for (long long b = 1; b < a; ++b)
                for (long long c = 0; c < b; ++c)
                    for (long long p : {2LL, 3LL, 5LL})
                        REQUIRE(check_min_valuation(NNTuple({a, b, c}), Int(p)));
    }
}
