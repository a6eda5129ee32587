#pragma once

// Cubic generating polynomials n(x) = (ax + b)(2ax + c)(alpha x + beta) whose
// values carry the Delta-triple (ax + b, 2ax + c, 2ax + c) for all x >= n0.

#include <vector>

#include "ndelta/arith.hpp"

namespace ndelta {

struct PolyFamily {
    i64 a = 0;
    i64 b = 0;
    i64 c = 0;
    i64 alpha = 0;
    i64 beta = 0;
    u64 n0 = 0;  ///< least natural x from which 1 < ax+b < 2ax+c < sqrt(n(x)) holds for good
};

/// Upper limit on the n0 search.
inline constexpr u64 kFamilyScanCap = 1'000'000;

/// Throws DomainError when a <= 0, 2b <= c, or (2b - c) does not divide
/// gcd(3a, 2c - b); throws DomainError if n0 would exceed kFamilyScanCap.
PolyFamily make_family(i64 a, i64 b, i64 c);

/// Signed value of n(x) in 128 bits.
i128 family_value(const PolyFamily& fam, i64 x);

/// Whether 1 < ax+b < 2ax+c and (2ax+c)^2 < n(x) hold at x.
bool family_chain_holds(const PolyFamily& fam, i64 x);

struct FamilyValue {
    u64 x = 0;
    u64 n = 0;
};

/// n(x) for x = n0, ..., n0 + count - 1, each confirmed a member by has_delta.
/// Throws OverflowError past the ceiling and VerificationError if a value
/// fails the membership check.
std::vector<FamilyValue> family_members(const PolyFamily& fam, u64 count);

struct SquareHit {
    u64 x = 0;
    u64 n = 0;
    u64 root = 0;
    bool primitive = false;
};

/// Every x in [n0, xmax] with n(x) a perfect square.
std::vector<SquareHit> square_scan(const PolyFamily& fam, u64 xmax);

}  // namespace ndelta
