#include "ndelta/arith.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ndelta/error.hpp"

namespace ndelta {

void require_natural(u64 n) {
    if (n == 0) throw DomainError("expected a natural number >= 1, got 0");
    if (n > kCeiling)
        throw OverflowError("value " + std::to_string(n) + " exceeds the ceiling 2^63-1");
}

u64 checked_mul(u64 a, u64 b) {
    return narrow(static_cast<u128>(a) * b);
}

u64 checked_add(u64 a, u64 b) {
    return narrow(static_cast<u128>(a) + b);
}

u64 narrow(u128 v) {
    if (v > kCeiling) throw OverflowError("intermediate result exceeds the ceiling 2^63-1");
    return static_cast<u64>(v);
}

Factorization factorize(u64 n) {
    require_natural(n);
    Factorization f;
    f.n = n;
    u64 m = n;
    auto strip = [&](u64 p) {
        unsigned e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 0) f.factors.push_back({p, e});
    };
    strip(2);
    strip(3);
    // 6k +- 1 wheel
    for (u64 p = 5; p <= m / p; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (m > 1) f.factors.push_back({m, 1});
    return f;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (u64 p = 5; p <= n / p; p += 6) {
        if (n % p == 0 || n % (p + 2) == 0) return false;
    }
    return true;
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : f.factors) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<u64> divisors(u64 n) { return divisors(factorize(n)); }

u64 tau(const Factorization& f) {
    u64 t = 1;
    for (const auto& pe : f.factors) t *= pe.exponent + 1;
    return t;
}

u64 tau(u64 n) { return tau(factorize(n)); }

unsigned valuation(u64 p, u64 n) {
    require_natural(n);
    if (!is_prime(p)) throw DomainError("valuation: " + std::to_string(p) + " is not prime");
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

u64 isqrt(u64 n) {
    auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::optional<u64> perfect_square_root(u64 n) {
    require_natural(n);
    const u64 r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

bool is_perfect_square(u64 n) { return perfect_square_root(n).has_value(); }

u64 squarefree_part(const Factorization& f) {
    u64 s = 1;
    for (const auto& [p, e] : f.factors)
        if (e % 2 == 1) s *= p;
    return s;
}

u64 squarefree_part(u64 n) { return squarefree_part(factorize(n)); }

bool is_squarefree(u64 n) {
    const auto f = factorize(n);
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [](const PrimePower& pe) { return pe.exponent == 1; });
}

u64 reconstruct(const Factorization& f) {
    u64 n = 1;
    for (const auto& [p, e] : f.factors)
        for (unsigned k = 0; k < e; ++k) n = checked_mul(n, p);
    return n;
}

}  // namespace ndelta
