#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ndelta/delta.hpp"
#include "ndelta/error.hpp"
#include "ndelta/polyfam.hpp"
#include "ndelta/verify.hpp"
#include "support/oracle.hpp"

using namespace ndelta;

namespace {

bool square_by_float(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

// Least x0 such that the chain 1 < ax+b < 2ax+c, (2ax+c)^2 < n(x) holds for
// every x in [x0, horizon].
u64 chain_start(const PolyFamily& f, i64 horizon) {
    i64 x0 = horizon + 1;
    for (i64 x = horizon; x >= 1; --x) {
        const i128 lo = static_cast<i128>(f.a) * x + f.b;
        const i128 hi = 2 * static_cast<i128>(f.a) * x + f.c;
        const i128 n = lo * hi * (static_cast<i128>(f.alpha) * x + f.beta);
        if (!(1 < lo && lo < hi && hi * hi < n)) break;
        x0 = x;
    }
    return static_cast<u64>(x0);
}

}  // namespace

TEST_CASE("named families") {
    const auto f1 = make_family(1, 0, -1);
    CHECK(f1.alpha == 3);
    CHECK(f1.beta == -2);
    const auto f2 = make_family(3, 4, 7);
    CHECK(f2.alpha == 9);
    CHECK(f2.beta == 10);
    const auto f3 = make_family(1, 2, 1);
    CHECK(f3.alpha == 1);
    CHECK(f3.beta == 0);
    CHECK(f3.n0 == 2);

    const auto m1 = family_members(f1, 2);
    REQUIRE(m1.size() == 2);
    CHECK(m1[0].x == 2);
    CHECK(m1[0].n == 24);
    CHECK(m1[1].x == 3);
    CHECK(m1[1].n == 105);
    const auto m3 = family_members(f3, 1);
    CHECK(m3[0].x == 2);
    CHECK(m3[0].n == 40);

    const auto f4 = make_family(1, -1, -5);
    CHECK(f4.n0 == 5);
    CHECK(family_members(f4, 1)[0].n == 40);

    for (i64 x = 2; x <= 300; ++x)
        CHECK(family_value(f1, x) == extremal_bound(static_cast<u64>(x), Regime::Duplicated).bound);
}

TEST_CASE("make_family errors") {
    CHECK_THROWS_AS(make_family(0, 1, 1), DomainError);
    CHECK_THROWS_AS(make_family(1, 0, 0), DomainError);   // 2b = c
    CHECK_THROWS_AS(make_family(1, 0, 3), DomainError);   // 2b < c
    CHECK_THROWS_AS(make_family(1, 1, 0), DomainError);   // 2 does not divide gcd(3, -1)
    CHECK_THROWS_AS(family_members(make_family(1, 0, -1), 0), DomainError);
}

TEST_CASE("grid families: n0 is exact and members are in the set") {
    const auto grid = family_grid();
    CHECK(grid.size() >= 25);
    for (const auto& f : grid) {
        CAPTURE(f.a);
        CAPTURE(f.b);
        CAPTURE(f.c);
        CHECK(3 * f.a % (2 * f.b - f.c) == 0);
        CHECK(f.alpha > 0);
        CHECK(chain_start(f, static_cast<i64>(f.n0) + 400) == f.n0);
        for (const auto& m : family_members(f, 21)) {
            CHECK(oracle::has_delta(m.n));
            // (ax+b, 2ax+c, 2ax+c) is a duplicated triple of n(x).
            const i64 x = static_cast<i64>(m.x);
            CHECK(is_delta_triple(m.n, static_cast<u64>(f.a * x + f.b), static_cast<u64>(2 * f.a * x + f.c),
                                  static_cast<u64>(2 * f.a * x + f.c)));
        }
    }
}

TEST_CASE("square scan") {
    const auto f1 = make_family(1, 0, -1);
    for (const auto& h : square_scan(f1, 10000)) {
        CHECK(h.root * h.root == h.n);
        CHECK(has_delta(h.n));
    }
    const auto f3 = make_family(1, 2, 1);
    const auto hits = square_scan(f3, 10000);
    std::vector<u64> expected;
    for (i64 x = static_cast<i64>(f3.n0); x <= 10000; ++x) {
        const u64 n = static_cast<u64>(family_value(f3, x));
        if (square_by_float(n)) expected.push_back(static_cast<u64>(x));
    }
    REQUIRE(hits.size() == expected.size());
    for (std::size_t i = 0; i < hits.size(); ++i) {
        CHECK(hits[i].x == expected[i]);
        CHECK(has_delta(hits[i].n));
        CHECK(hits[i].primitive == is_primitive(hits[i].n));
    }
    CHECK_THROWS_AS(square_scan(f3, f3.n0 - 1), DomainError);
}

TEST_CASE("no linear generic family at n = XYZ") {
    // A linear (X, Y, Z) that is a triple of XYZ on 50 consecutive t in [1, 150]
    // would have to pass at t = 50, 100 or 150.
    auto triple_at = [](const std::array<i64, 6>& c, i64 t) {
        const i128 x = c[0] * t + c[1], y = c[2] * t + c[3], z = c[4] * t + c[5];
        if (!(1 < x && x < y && y <= z)) return false;
        if (!(z < x * y)) return false;  // z^2 < xyz
        return x * y + x * z - y * z == z + y - x;
    };
    long survivors = 0;
    long windows = 0;
    std::array<i64, 6> c{};
    for (c[0] = -10; c[0] <= 10; ++c[0])
        for (c[1] = -10; c[1] <= 10; ++c[1])
            for (c[2] = -10; c[2] <= 10; ++c[2])
                for (c[3] = -10; c[3] <= 10; ++c[3])
                    for (c[4] = -10; c[4] <= 10; ++c[4])
                        for (c[5] = -10; c[5] <= 10; ++c[5]) {
                            if (!triple_at(c, 50) && !triple_at(c, 100) && !triple_at(c, 150)) continue;
                            ++survivors;
                            int run = 0;
                            for (i64 t = 1; t <= 150; ++t) {
                                run = triple_at(c, t) ? run + 1 : 0;
                                if (run >= 50) {
                                    ++windows;
                                    break;
                                }
                            }
                        }
    MESSAGE("coefficient triples passing a probe point: " << survivors);
    CHECK(windows == 0);
}
