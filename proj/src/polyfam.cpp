#include "ndelta/polyfam.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include "ndelta/delta.hpp"
#include "ndelta/error.hpp"

namespace ndelta {

namespace {

i128 abs128(i128 v) { return v < 0 ? -v : v; }

// Coefficients (c3, c2, c1, c0) of g(x) = n(x) - (2ax + c)^2.
struct Cubic {
    i128 c3, c2, c1, c0;
};

Cubic chain_gap(const PolyFamily& f) {
    // (ax + b)(2ax + c) = 2a^2 x^2 + (ac + 2ab) x + bc
    const i128 q2 = 2 * static_cast<i128>(f.a) * f.a;
    const i128 q1 = static_cast<i128>(f.a) * f.c + 2 * static_cast<i128>(f.a) * f.b;
    const i128 q0 = static_cast<i128>(f.b) * f.c;
    Cubic g{q2 * f.alpha, q2 * f.beta + q1 * f.alpha, q1 * f.beta + q0 * f.alpha, q0 * f.beta};
    g.c2 -= 4 * static_cast<i128>(f.a) * f.a;
    g.c1 -= 4 * static_cast<i128>(f.a) * f.c;
    g.c0 -= static_cast<i128>(f.c) * f.c;
    return g;
}

// Every real root of the cubic gap and of the linear conditions lies below this.
i128 root_bound(const PolyFamily& f) {
    const Cubic g = chain_gap(f);
    const i128 lead = g.c3;
    const i128 cauchy = 1 + std::max({abs128(g.c2), abs128(g.c1), abs128(g.c0)}) / lead + 1;
    // ax + b > 1 and ax > b - c
    const i128 lin = 2 + (abs128(f.b) + abs128(f.c) + 1) / f.a;
    return std::max(cauchy, lin);
}

}  // namespace

i128 family_value(const PolyFamily& fam, i64 x) {
    return (static_cast<i128>(fam.a) * x + fam.b) * (2 * static_cast<i128>(fam.a) * x + fam.c) *
           (static_cast<i128>(fam.alpha) * x + fam.beta);
}

bool family_chain_holds(const PolyFamily& fam, i64 x) {
    const i128 lo = static_cast<i128>(fam.a) * x + fam.b;
    const i128 hi = 2 * static_cast<i128>(fam.a) * x + fam.c;
    if (!(1 < lo && lo < hi)) return false;
    return hi * hi < family_value(fam, x);
}

PolyFamily make_family(i64 a, i64 b, i64 c) {
    if (a <= 0) throw DomainError("make_family: a must be positive");
    const i64 m = 2 * b - c;
    if (m <= 0) throw DomainError("make_family: need 2b > c");
    const i64 g = std::gcd(3 * a, 2 * c - b);
    if (g % m != 0)
        throw DomainError("make_family: 2b - c = " + std::to_string(m) + " does not divide gcd(3a, 2c - b) = " +
                          std::to_string(g));
    PolyFamily f{a, b, c, 3 * a / m, (2 * c - b) / m, 0};

    // Past the root bound every condition holds and every factor increases, so
    // n0 is one past the last failure below it.
    const i128 bound = root_bound(f);
    if (bound > static_cast<i128>(kFamilyScanCap))
        throw DomainError("make_family: n0 search exceeds the scan cap");
    u64 n0 = 1;
    for (i64 x = static_cast<i64>(bound); x >= 1; --x) {
        if (!family_chain_holds(f, x)) {
            n0 = static_cast<u64>(x) + 1;
            break;
        }
    }
    f.n0 = n0;
    return f;
}

std::vector<FamilyValue> family_members(const PolyFamily& fam, u64 count) {
    if (count < 1) throw DomainError("family_members: count must be >= 1");
    std::vector<FamilyValue> out;
    out.reserve(count);
    for (u64 i = 0; i < count; ++i) {
        const u64 x = fam.n0 + i;
        const i128 v = family_value(fam, static_cast<i64>(x));
        if (v <= 0) throw VerificationError("family value is not positive at x = " + std::to_string(x));
        const u64 n = narrow(static_cast<u128>(v));
        if (!has_delta(n))
            throw VerificationError("family value " + std::to_string(n) + " at x = " + std::to_string(x) +
                                    " lacks the Delta property");
        out.push_back({x, n});
    }
    return out;
}

std::vector<SquareHit> square_scan(const PolyFamily& fam, u64 xmax) {
    if (xmax < fam.n0) throw DomainError("square_scan: xmax must be >= n0");
    std::vector<SquareHit> out;
    for (u64 x = fam.n0; x <= xmax; ++x) {
        const u64 n = narrow(static_cast<u128>(family_value(fam, static_cast<i64>(x))));
        if (auto r = perfect_square_root(n)) out.push_back({x, n, *r, is_primitive(n)});
    }
    return out;
}

}  // namespace ndelta
