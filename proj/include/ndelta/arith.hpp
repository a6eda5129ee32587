#pragma once

// Exact integer arithmetic on naturals below 2^63.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace ndelta {

using u64 = std::uint64_t;
using i64 = std::int64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

/// Largest natural accepted anywhere in the library.
inline constexpr u64 kCeiling = 0x7fffffffffffffffULL;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    friend auto operator<=>(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition, primes strictly increasing. Empty iff n == 1.
struct Factorization {
    u64 n = 1;
    std::vector<PrimePower> factors;

    /// Number of distinct primes.
    std::size_t omega() const { return factors.size(); }
};

/// Throws DomainError for n == 0 and OverflowError for n > kCeiling.
void require_natural(u64 n);

/// Trial division up to sqrt(n).
Factorization factorize(u64 n);

bool is_prime(u64 n);

/// Ascending, duplicate-free.
std::vector<u64> divisors(u64 n);
std::vector<u64> divisors(const Factorization& f);

u64 tau(u64 n);
u64 tau(const Factorization& f);

/// Largest k with p^k | n. Throws DomainError if p is not prime.
unsigned valuation(u64 p, u64 n);

u64 isqrt(u64 n);

/// Integer square root when n is a perfect square.
std::optional<u64> perfect_square_root(u64 n);
bool is_perfect_square(u64 n);

/// Product of the primes with odd valuation.
u64 squarefree_part(u64 n);
u64 squarefree_part(const Factorization& f);
bool is_squarefree(u64 n);

/// a * b, throwing OverflowError when the product exceeds kCeiling.
u64 checked_mul(u64 a, u64 b);
u64 checked_add(u64 a, u64 b);
/// Narrows a 128-bit intermediate, throwing OverflowError above kCeiling.
u64 narrow(u128 v);

/// Product over the factorization; throws OverflowError on overflow.
u64 reconstruct(const Factorization& f);

}  // namespace ndelta
