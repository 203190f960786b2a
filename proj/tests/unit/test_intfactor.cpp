#include "arrexp/intfactor.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace arrexp;

TEST_CASE("primality", "[intfactor]") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(3)));
    CHECK(is_prime(Int(97)));
    CHECK(is_prime(Int(1000003)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(0)));
    CHECK_FALSE(is_prime(Int(Int(1000003) * 1000033)));

    SECTION("Carmichael numbers are composite") {
        CHECK_FALSE(is_prime(Int(561)));
        CHECK_FALSE(is_prime(Int(41041)));
    }

    SECTION("large Mersenne prime") {
        CHECK(is_prime((Int(1) << 61) - 1));
    }
}

TEST_CASE("factorization multiplies back", "[intfactor]") {
    auto check_roundtrip = [](const Int& n) {
        Int prod = 1;
        for (auto& [p, k] : factorize(n)) {
            CHECK(is_prime(p));
            for (long long i = 0; i < k; ++i) prod *= p;
        }
        CHECK(prod == n);
    };
    check_roundtrip(Int(1));
    check_roundtrip(Int(2));
    check_roundtrip(Int(1024) * 243 * 7);
    check_roundtrip(Int(1000003) * 1000033);
    check_roundtrip(factorial(15));

    SECTION("exponents are collected") {
        auto f = factorize(Int(360));
        REQUIRE(f.size() == 3);
        CHECK(f[Int(2)] == 3);
        CHECK(f[Int(3)] == 2);
        CHECK(f[Int(5)] == 1);
    }
}

TEST_CASE("divisors come back sorted", "[intfactor]") {
    auto d = divisors(Int(60));
    std::vector<Int> expect = {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
    CHECK(d == expect);
    CHECK(divisors(Int(1)) == std::vector<Int>{1});
    CHECK(divisors(Int(97)) == std::vector<Int>{1, 97});
}
