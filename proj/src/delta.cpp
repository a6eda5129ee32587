#include "ndelta/delta.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ndelta/error.hpp"
#include "ndelta/simd.hpp"

namespace ndelta {

namespace {

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        const u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Root of the largest square dividing n: prod p^(e/2).
u64 square_root_part(const Factorization& f) {
    u64 r = 1;
    for (const auto& [p, e] : f.factors)
        for (unsigned k = 0; k < e / 2; ++k) r *= p;
    return r;
}

// Complementary-divisor differences n/d - d over the small divisors, ascending.
std::vector<u64> positive_differences(u64 n, const std::vector<u64>& small) {
    std::vector<u64> v(small.size());
    for (std::size_t i = 0; i < small.size(); ++i) v[small.size() - 1 - i] = n / small[i] - small[i];
    return v;
}

}  // namespace

bool is_delta_triple(u64 n, u64 x, u64 y, u64 z) {
    if (n < 2 || n > kCeiling) return false;
    if (!(1 < x && x < y && y <= z)) return false;
    if (static_cast<u128>(z) * z >= n) return false;
    if (n % x != 0 || n % y != 0 || n % z != 0) return false;
    if (n / x - x != (n / y - y) + (n / z - z)) return false;
    const i128 lhs = (static_cast<i128>(x) * y + static_cast<i128>(x) * z - static_cast<i128>(y) * z) * n;
    const i128 rhs = static_cast<i128>(x) * y * z * (static_cast<i128>(z) + y - x);
    return lhs == rhs;
}

std::vector<u64> small_divisors(const Factorization& f) {
    std::vector<u64> out = divisors(f);
    const u64 n = f.n;
    auto end = std::find_if(out.begin(), out.end(), [n](u64 d) { return static_cast<u128>(d) * d >= n; });
    out.erase(end, out.end());
    return out;
}

DivisorDiffSets divisor_diff_sets(u64 n) {
    require_natural(n);
    if (n < 2) throw DomainError("divisor_diff_sets: n must be >= 2");
    DivisorDiffSets s;
    s.n = n;
    for (u64 a : divisors(n)) {
        const u64 b = n / a;
        s.dstar.push_back(a > b ? a - b : b - a);
    }
    std::sort(s.dstar.begin(), s.dstar.end());
    s.dstar.erase(std::unique(s.dstar.begin(), s.dstar.end()), s.dstar.end());
    auto first = std::upper_bound(s.dstar.begin(), s.dstar.end(), u64{0});
    for (auto i = first; i != s.dstar.end(); ++i)
        for (auto j = i; j != s.dstar.end(); ++j) s.dplus.push_back(checked_add(*i, *j));
    std::sort(s.dplus.begin(), s.dplus.end());
    s.dplus.erase(std::unique(s.dplus.begin(), s.dplus.end()), s.dplus.end());
    return s;
}

bool has_delta(const Factorization& f) {
    if (f.n < 2) return false;
    const std::vector<u64> v = positive_differences(f.n, small_divisors(f));
    // c = v[k] lies in D+ iff {c - v[i] : i < k} meets {v[0..k)}.
    std::vector<u64> complements;
    complements.reserve(v.size());
    for (std::size_t k = 1; k < v.size(); ++k) {
        complements.clear();
        for (std::size_t i = k; i-- > 0;) complements.push_back(v[k] - v[i]);
        if (simd::sorted_intersects(complements, std::span<const u64>(v.data(), k))) return true;
    }
    return false;
}

bool has_delta(u64 n) { return has_delta(factorize(n)); }

std::vector<DeltaTriple> delta_triples(const Factorization& f) {
    const u64 n = f.n;
    std::vector<DeltaTriple> out;
    if (n < 2) return out;
    const std::vector<u64> sd = small_divisors(f);
    const std::size_t m = sd.size();
    // diff[i] = n / sd[i] - sd[i], strictly decreasing in i.
    std::vector<u64> diff(m);
    for (std::size_t i = 0; i < m; ++i) diff[i] = n / sd[i] - sd[i];
    for (std::size_t ix = 1; ix < m; ++ix) {
        if (sd[ix] <= 1) continue;
        for (std::size_t iy = ix + 1; iy < m; ++iy) {
            const u64 target = diff[ix] - diff[iy];
            // z >= y  <=>  diff(z) <= diff(y)
            auto it = std::lower_bound(diff.begin() + static_cast<std::ptrdiff_t>(iy), diff.end(), target,
                                       [](u64 a, u64 b) { return a > b; });
            if (it != diff.end() && *it == target) {
                const auto iz = static_cast<std::size_t>(it - diff.begin());
                out.push_back({n, sd[ix], sd[iy], sd[iz]});
            }
        }
    }
    return out;
}

std::vector<DeltaTriple> delta_triples(u64 n) { return delta_triples(factorize(n)); }

std::vector<u64> delta_set(u64 limit) {
    std::vector<u64> out;
    for (u64 n = 2; n <= limit; ++n)
        if (has_delta(n)) out.push_back(n);
    return out;
}

bool is_primitive(u64 n) {
    const Factorization f = factorize(n);
    if (!has_delta(f)) return false;
    for (u64 alpha : divisors(square_root_part(f))) {
        if (alpha < 2) continue;
        if (has_delta(n / (alpha * alpha))) return false;
    }
    return true;
}

std::vector<PrimitiveDecomposition> primitive_decompositions(u64 n) {
    const Factorization f = factorize(n);
    if (!has_delta(f))
        throw DomainError("primitive_decompositions: " + std::to_string(n) + " does not have the Delta property");
    std::vector<PrimitiveDecomposition> out;
    for (u64 alpha : divisors(square_root_part(f))) {
        const u64 m = n / (alpha * alpha);
        if (is_primitive(m)) out.push_back({n, alpha, m});
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.m < r.m; });
    if (out.empty()) throw VerificationError("member " + std::to_string(n) + " has no primitive decomposition");
    return out;
}

std::optional<DeltaTriple> triple_for(u64 x, u64 y, u64 z) {
    if (!(1 < x && x < y && y <= z) || z > (u64{1} << 31)) return std::nullopt;
    const i128 den = static_cast<i128>(x) * y + static_cast<i128>(x) * z - static_cast<i128>(y) * z;
    if (den <= 0) return std::nullopt;
    const i128 num = static_cast<i128>(x) * y * z * (static_cast<i128>(z) + y - x);
    if (num % den != 0 || num / den > static_cast<i128>(kCeiling)) return std::nullopt;
    const u64 n = static_cast<u64>(num / den);
    if (!is_delta_triple(n, x, y, z)) return std::nullopt;
    return DeltaTriple{n, x, y, z};
}

std::vector<DeltaTriple> triples_with_component(u64 t) {
    if (t < 2) throw DomainError("triples_with_component: t must be >= 2");
    if (t > (u64{1} << 15)) throw OverflowError("triples_with_component: t too large for exact search");
    std::vector<DeltaTriple> out;
    auto consider = [&](u64 x, u64 y, u64 z) {
        if (auto tr = triple_for(x, y, z)) out.push_back(*tr);
    };
    for (u64 x = 2; x <= t; ++x) {
        const u64 zmax = x * x + x - 1;
        for (u64 y = x + 1; y < 2 * x; ++y) {
            if (x == t || y == t) {
                for (u64 z = y; z <= zmax; ++z) consider(x, y, z);
            } else if (y <= t && t <= zmax) {
                consider(x, y, t);
            }
        }
    }
    return out;
}

DescentWitness descent_witness(u64 n, u64 x, u64 y) {
    if (!is_delta_triple(n, x, y, y))
        throw DomainError("descent_witness: (" + std::to_string(x) + "," + std::to_string(y) + "," +
                          std::to_string(y) + ") is not a Delta-triple for " + std::to_string(n));
    DescentWitness w;
    w.n = n;
    w.x = x;
    w.y = y;
    w.d = std::gcd(x, y);
    w.a = x / w.d;
    w.b = y / w.d;
    const u128 a = w.a;
    const u128 b = w.b;
    const u128 d = w.d;
    // y < 2x makes both factors positive.
    const u128 left = 2 * a - b;
    const u128 right = 2 * b - a;
    if (left * n != d * d * a * b * right) throw VerificationError("descent identity fails");
    const u128 g = gcd128(left, a * b * right);
    if (6 % g != 0) throw VerificationError("gcd(2a-b, ab(2b-a)) does not divide 6");
    w.gcd_factor = static_cast<u64>(g);
    if ((d * d) % (left / gcd128(left, 6)) != 0) throw VerificationError("(2a-b)/gcd(2a-b,6) does not divide d^2");
    return w;
}

ExtremalBound extremal_bound(u64 x, Regime regime) {
    if (x < 2) throw DomainError("extremal_bound: x must be >= 2");
    ExtremalBound e;
    if (regime == Regime::Duplicated) {
        const u64 y = checked_add(x, x - 1);
        e.bound = checked_mul(checked_mul(x, y), checked_mul(3, x) - 2);
        e.triple = {e.bound, x, y, y};
    } else {
        const u64 x1 = checked_add(x, 1);
        const u64 z = checked_mul(x, x1) - 1;
        e.bound = checked_mul(checked_mul(checked_mul(x, x), checked_mul(x1, x1)), z);
        e.triple = {e.bound, x, x1, z};
    }
    if (!is_delta_triple(e.triple)) throw VerificationError("extremal triple fails the Delta-triple check");
    return e;
}

bool xyz_identity_holds(u64 x, u64 y, u64 z) {
    if (!(1 < x && x < y && y <= z)) throw DomainError("xyz_identity_holds: need 1 < x < y <= z");
    const u128 lhs = static_cast<u128>(y - x + 1) * (z - x + 1);
    const u128 rhs = static_cast<u128>(x) * x - x + 1;
    return lhs == rhs;
}

DoubleRepresentation double_representation(u64 m, u64 l, u64 k) {
    if (m == l) throw DomainError("double_representation: the two squares must differ");
    if (k < 1) throw DomainError("double_representation: k must be >= 1");
    const auto rm = perfect_square_root(m);
    const auto rl = perfect_square_root(l);
    if (!rm || !rl) throw DomainError("double_representation: arguments must be perfect squares");
    if (!is_primitive(m) || !is_primitive(l))
        throw DomainError("double_representation: arguments must be Delta-primitive");
    const u64 g = std::gcd(*rm, *rl);
    DoubleRepresentation r;
    r.a = checked_mul(k, *rl / g);
    r.b = checked_mul(k, *rm / g);
    r.n = checked_mul(checked_mul(r.a, r.a), m);
    if (checked_mul(checked_mul(r.b, r.b), l) != r.n) throw VerificationError("a^2 m != b^2 l");
    return r;
}

std::vector<u64> primitives_with_squarefree_part(u64 s, u64 limit) {
    require_natural(s);
    if (!is_squarefree(s)) throw DomainError(std::to_string(s) + " is not square-free");
    std::vector<u64> out;
    for (u64 t = 1;; ++t) {
        const u128 v = static_cast<u128>(s) * t * t;
        if (v > limit) break;
        const auto n = static_cast<u64>(v);
        if (is_primitive(n)) out.push_back(n);
    }
    return out;
}

}  // namespace ndelta
