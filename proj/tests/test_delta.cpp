#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "ndelta/delta.hpp"
#include "ndelta/error.hpp"
#include "support/oracle.hpp"

using namespace ndelta;

namespace {

std::vector<std::tuple<u64, u64, u64>> xyz(const std::vector<DeltaTriple>& ts) {
    std::vector<std::tuple<u64, u64, u64>> out;
    for (const auto& t : ts) out.emplace_back(t.x, t.y, t.z);
    return out;
}

}  // namespace

TEST_CASE("divisor difference sets") {
    const auto d24 = divisor_diff_sets(24);
    CHECK(d24.dstar == std::vector<u64>{2, 5, 10, 23});
    CHECK(d24.dplus == std::vector<u64>{4, 7, 10, 12, 15, 20, 25, 28, 33, 46});
    const auto d40 = divisor_diff_sets(40);
    CHECK(std::binary_search(d40.dstar.begin(), d40.dstar.end(), 3));
    CHECK(std::binary_search(d40.dstar.begin(), d40.dstar.end(), 6));
    CHECK(std::binary_search(d40.dplus.begin(), d40.dplus.end(), 6));
    CHECK(divisor_diff_sets(9).dstar == std::vector<u64>{0, 8});
    CHECK_THROWS_AS(divisor_diff_sets(1), DomainError);
    for (u64 n = 2; n <= 1500; ++n) {
        const auto d = divisor_diff_sets(n);
        CHECK(d.dstar == oracle::dstar(n));
        CHECK(d.dplus == oracle::dplus(n));
        CHECK(d.dstar.back() == n - 1);
    }
}

TEST_CASE("membership examples") {
    CHECK(has_delta(24));
    CHECK(has_delta(40));
    CHECK_FALSE(has_delta(23));
    CHECK(has_delta(105));
    CHECK(delta_set(23).empty());
    CHECK(delta_set(40) == std::vector<u64>{24, 40});
    for (u64 n : delta_set(104)) CHECK(n % 2 == 0);
}

TEST_CASE("triple examples") {
    using T = std::vector<std::tuple<u64, u64, u64>>;
    CHECK(xyz(delta_triples(24)) == T{{2, 3, 3}});
    CHECK(xyz(delta_triples(40)) == T{{4, 5, 5}});
    CHECK(xyz(delta_triples(385)) == T{{5, 7, 11}, {7, 11, 11}});
    CHECK(xyz(delta_triples(180)) == T{{2, 3, 5}, {9, 10, 12}});
    CHECK(xyz(delta_triples(1729)) == T{{7, 13, 13}});
    const auto t2080 = xyz(delta_triples(2080));
    CHECK(std::find(t2080.begin(), t2080.end(), std::tuple<u64, u64, u64>{8, 10, 26}) != t2080.end());
    CHECK(delta_triples(23).empty());
}

TEST_CASE("three membership paths agree with the oracle") {
    for (u64 n = 2; n <= 4000; ++n) {
        const bool o = oracle::has_delta(n);
        CHECK(has_delta(n) == o);
        const auto ts = delta_triples(n);
        CHECK(xyz(ts) == oracle::triples(n));
        CHECK(ts.empty() != o);
        for (const auto& t : ts) CHECK(is_delta_triple(t));
    }
}

TEST_CASE("is_delta_triple rejects bad shapes") {
    CHECK(is_delta_triple(24, 2, 3, 3));
    CHECK_FALSE(is_delta_triple(24, 3, 2, 3));
    CHECK_FALSE(is_delta_triple(24, 1, 3, 3));
    CHECK_FALSE(is_delta_triple(25, 2, 3, 3));
    CHECK_FALSE(is_delta_triple(48, 2, 3, 3));
}

TEST_CASE("primitivity") {
    CHECK(is_primitive(24));
    CHECK(is_primitive(40));
    CHECK_FALSE(is_primitive(96));
    using D = std::vector<PrimitiveDecomposition>;
    CHECK(primitive_decompositions(96) == D{{96, 2, 24}});
    CHECK(primitive_decompositions(24) == D{{24, 1, 24}});
    CHECK(primitive_decompositions(5616) == D{{5616, 3, 624}, {5616, 2, 1404}});
    CHECK_THROWS_AS(primitive_decompositions(23), DomainError);
    for (u64 n = 2; n <= 3000; ++n) {
        CHECK(is_primitive(n) == oracle::is_primitive(n));
        if (!oracle::has_delta(n)) continue;
        const auto ds = primitive_decompositions(n);
        CHECK_FALSE(ds.empty());
        for (const auto& d : ds) {
            CHECK(d.alpha * d.alpha * d.m == n);
            CHECK(oracle::is_primitive(d.m));
        }
        CHECK(is_primitive(n) == (ds.size() == 1 && ds[0].alpha == 1));
    }
}

TEST_CASE("square-multiple closure") {
    for (u64 n : delta_set(2000))
        for (u64 a = 2; a <= 5; ++a) CHECK(has_delta(a * a * n));
    CHECK(has_delta(24ULL * 24 * 24));
}

TEST_CASE("triples with a given component") {
    const auto t2 = triples_with_component(2);
    CHECK(std::find(t2.begin(), t2.end(), DeltaTriple{24, 2, 3, 3}) != t2.end());
    for (const auto& t : t2) CHECK(t.y != 2 * t.x);
    const auto t5 = triples_with_component(5);
    CHECK(std::find(t5.begin(), t5.end(), DeltaTriple{40, 4, 5, 5}) != t5.end());
    CHECK(std::find(t5.begin(), t5.end(), DeltaTriple{385, 5, 7, 11}) != t5.end());
    CHECK_THROWS_AS(triples_with_component(1), DomainError);

    // Cross-check with the divisor scan: every triple of n <= 20000 with a
    // component t appears in the component search for t.
    for (u64 t = 2; t <= 12; ++t) {
        const auto found = triples_with_component(t);
        for (const auto& tr : found) {
            CHECK(is_delta_triple(tr));
            CHECK((tr.x == t || tr.y == t || tr.z == t));
        }
        for (u64 n = 2; n <= 20000; ++n)
            for (const auto& [x, y, z] : oracle::triples(n))
                if (x == t || y == t || z == t)
                    CHECK(std::find(found.begin(), found.end(), DeltaTriple{n, x, y, z}) != found.end());
    }
    CHECK(triple_for(2, 3, 3) == DeltaTriple{24, 2, 3, 3});
    CHECK(triple_for(2, 3, 4) == DeltaTriple{60, 2, 3, 4});
    CHECK_FALSE(triple_for(3, 4, 5).has_value());
    CHECK_FALSE(triple_for(3, 3, 5).has_value());
}

TEST_CASE("descent witness") {
    const auto w = descent_witness(24, 2, 3);
    CHECK(w.d == 1);
    CHECK(w.a == 2);
    CHECK(w.b == 3);
    CHECK((2 * w.a - w.b) * 24 == w.d * w.d * w.a * w.b * (2 * w.b - w.a));
    const auto w40 = descent_witness(40, 4, 5);
    CHECK(w40.a == 4);
    CHECK(w40.b == 5);
    CHECK((2 * w40.a - w40.b) * 40 == w40.d * w40.d * w40.a * w40.b * (2 * w40.b - w40.a));
    const auto w624 = descent_witness(624, 8, 13);
    CHECK(w624.d == 1);
    CHECK(w624.a == 8);
    CHECK(w624.b == 13);
    CHECK((2 * w624.a - w624.b) * 624 == w624.a * w624.b * (2 * w624.b - w624.a));
    CHECK_THROWS_AS(descent_witness(24, 2, 4), DomainError);

    for (u64 n = 2; n <= 30000; ++n)
        for (const auto& [x, y, z] : oracle::triples(n)) {
            if (y != z) continue;
            const auto dw = descent_witness(n, x, y);
            const u64 g = std::gcd(x, y);
            CHECK(dw.d == g);
            CHECK(6 % dw.gcd_factor == 0);
        }
}

TEST_CASE("extremal bounds") {
    const auto d2 = extremal_bound(2, Regime::Duplicated);
    CHECK(d2.bound == 24);
    CHECK(d2.triple == DeltaTriple{24, 2, 3, 3});
    const auto g2 = extremal_bound(2, Regime::Generic);
    CHECK(g2.bound == 180);
    CHECK(g2.triple == DeltaTriple{180, 2, 3, 5});
    const auto d3 = extremal_bound(3, Regime::Duplicated);
    CHECK(d3.bound == 105);
    CHECK(d3.triple == DeltaTriple{105, 3, 5, 5});
    CHECK_THROWS_AS(extremal_bound(1, Regime::Generic), DomainError);
    CHECK_THROWS_AS(extremal_bound(3'000'000'000ULL, Regime::Generic), OverflowError);

    // Maximality against the oracle's triples.
    for (u64 n = 2; n <= 30000; ++n)
        for (const auto& [x, y, z] : oracle::triples(n)) {
            if (y == z) {
                CHECK(n <= x * (2 * x - 1) * (3 * x - 2));
                CHECK((n == x * (2 * x - 1) * (3 * x - 2)) == (y == 2 * x - 1));
            } else {
                const u64 cap = x * x * (x + 1) * (x + 1) * (x * x + x - 1);
                CHECK(n <= cap);
                CHECK((n == cap) == (y == x + 1 && z == x * x + x - 1));
            }
        }
}

TEST_CASE("xyz identity") {
    CHECK(xyz_identity_holds(5, 7, 11));
    CHECK_FALSE(xyz_identity_holds(2, 3, 3));
    CHECK(xyz_identity_holds(8, 10, 26));
    CHECK_THROWS_AS(xyz_identity_holds(3, 3, 4), DomainError);
    for (u64 n = 2; n <= 30000; ++n)
        for (const auto& [x, y, z] : oracle::triples(n)) CHECK(xyz_identity_holds(x, y, z) == (x * y * z == n));
}

TEST_CASE("double representation") {
    const auto r = double_representation(900, 7056, 1);
    CHECK(r.a == 14);
    CHECK(r.b == 5);
    CHECK(r.n == 176400);
    const auto r2 = double_representation(900, 7056, 2);
    CHECK(r2.a == 28);
    CHECK(r2.b == 10);
    CHECK(r2.n == 705600);
    CHECK(has_delta(r.n));
    CHECK_THROWS_AS(double_representation(900, 900, 1), DomainError);
    CHECK_THROWS_AS(double_representation(24, 7056, 1), DomainError);
    CHECK_THROWS_AS(double_representation(3600, 7056, 1), DomainError);
}

TEST_CASE("primitives by square-free part") {
    CHECK(primitives_with_squarefree_part(39, 2000) == std::vector<u64>{624, 1404});
    CHECK(primitives_with_squarefree_part(6, 1000) == std::vector<u64>{24});
    CHECK(primitives_with_squarefree_part(1, 100).empty());
    CHECK_THROWS_AS(primitives_with_squarefree_part(12, 100), DomainError);
}

TEST_CASE("delta squares") {
    std::vector<u64> squares, primitive;
    for (u64 r = 2; r < 90; ++r) {
        if (oracle::has_delta(r * r)) squares.push_back(r * r);
        if (oracle::is_primitive(r * r)) primitive.push_back(r * r);
    }
    CHECK(squares == std::vector<u64>{900, 3600, 7056});
    CHECK(primitive == std::vector<u64>{900, 7056});
    for (u64 s : squares) CHECK(has_delta(s));
    // Products of Delta-squares stay in the set.
    for (u64 p : squares)
        for (u64 q : squares) CHECK(has_delta(p * q));
}

TEST_CASE("primitive parts of the duplicated extremal values carry p") {
    int count = 0;
    for (u64 p = 5; count < 20; ++p) {
        if (!oracle::is_prime(p)) continue;
        ++count;
        const u64 n = p * (2 * p - 1) * (3 * p - 2);
        REQUIRE(has_delta(n));
        for (const auto& d : primitive_decompositions(n)) CHECK(d.m % p == 0);
    }
}
