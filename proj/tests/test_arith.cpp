#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ndelta/arith.hpp"
#include "ndelta/error.hpp"
#include "support/oracle.hpp"

using namespace ndelta;

TEST_CASE("factorize small and structured inputs") {
    CHECK(factorize(1).factors.empty());
    const Factorization f = factorize(5616);  // 2^4 3^3 13
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == PrimePower{2, 4});
    CHECK(f.factors[1] == PrimePower{3, 3});
    CHECK(f.factors[2] == PrimePower{13, 1});
    CHECK(f.omega() == 3);
    CHECK(reconstruct(f) == 5616);

    // Mersenne prime near the ceiling and a product of two large primes.
    CHECK(is_prime(2305843009213693951ULL));
    const Factorization g = factorize(2147483647ULL * 2147483629ULL);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == 2147483629ULL);
    CHECK(g.factors[1].prime == 2147483647ULL);
}

TEST_CASE("factorize errors") {
    CHECK_THROWS_AS(factorize(0), DomainError);
    CHECK_THROWS_AS(factorize(kCeiling + 1), OverflowError);
    CHECK_NOTHROW(factorize(kCeiling));
}

TEST_CASE("divisors and tau agree with trial division") {
    CHECK(divisors(24) == std::vector<u64>{1, 2, 3, 4, 6, 8, 12, 24});
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(tau(5616) == 40);
    for (u64 n = 1; n <= 3000; ++n) {
        const auto d = divisors(n);
        CHECK(d.size() == oracle::tau(n));
        CHECK(tau(n) == oracle::tau(n));
        for (u64 x : d) CHECK(n % x == 0);
        CHECK(std::is_sorted(d.begin(), d.end()));
        CHECK(is_prime(n) == oracle::is_prime(n));
    }
}

TEST_CASE("valuation") {
    CHECK(valuation(2, 96) == 5);
    CHECK(valuation(3, 96) == 1);
    CHECK(valuation(5, 96) == 0);
    CHECK_THROWS_AS(valuation(4, 96), DomainError);
}

TEST_CASE("integer square roots") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(24) == 4);
    CHECK(isqrt(25) == 5);
    CHECK(perfect_square_root(7056) == std::optional<u64>{84});
    CHECK_FALSE(perfect_square_root(7057).has_value());
    CHECK(isqrt(kCeiling) == 3037000499ULL);
    const u64 r = 3037000499ULL;
    CHECK(is_perfect_square(r * r));
    CHECK_FALSE(is_perfect_square(r * r - 1));
    CHECK(isqrt(r * r - 1) == r - 1);

    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 20000; ++i) {
        const u64 n = rng() >> 1;
        const u64 s = isqrt(n);
        CHECK(static_cast<u128>(s) * s <= n);
        CHECK(static_cast<u128>(s + 1) * (s + 1) > n);
    }
    for (u64 n = 1; n <= 5000; ++n) CHECK(is_perfect_square(n) == oracle::is_square(n));
}

TEST_CASE("square-free part") {
    CHECK(squarefree_part(624) == 39);
    CHECK(squarefree_part(1404) == 39);
    CHECK(squarefree_part(96) == 6);
    CHECK(squarefree_part(900) == 1);
    CHECK(is_squarefree(105));
    CHECK_FALSE(is_squarefree(24));
    for (u64 n = 1; n <= 2000; ++n) {
        const u64 s = squarefree_part(n);
        CHECK(n % s == 0);
        CHECK(oracle::is_square(n / s));
        CHECK(is_squarefree(s));
    }
}

TEST_CASE("checked arithmetic") {
    CHECK(checked_mul(3037000499ULL, 3037000499ULL) == 9223372030926249001ULL);
    CHECK_THROWS_AS(checked_mul(kCeiling, 2), OverflowError);
    CHECK_THROWS_AS(checked_add(kCeiling, 1), OverflowError);
    CHECK(checked_add(kCeiling - 1, 1) == kCeiling);
    CHECK_THROWS_AS(narrow(static_cast<u128>(kCeiling) + 1), OverflowError);
}
