#pragma once

// Membership classification by the known obstruction and characterisation
// results, with the triple oracle as the fallback.

#include <optional>
#include <string_view>

#include "ndelta/delta.hpp"

namespace ndelta {

enum class Decision { Member, NonMember, OracleMember, OracleNonMember };

/// Applied in declaration order; the first decisive rule wins.
enum class Rule {
    TwoOdd,             // n = 2k, k odd
    PrimePower,         // n = p^k
    TwoPrimesLowExp,    // n in {pq, p^2 q, p q^2, p^2 q^2}
    PkQ,                // n = p^k q: member iff n = 2^(2h+1) q, q in {3, 5}
    DominatingPrime,    // n = p k with p prime, p >= k
    TwoPrimeDominated,  // n = p^x q^y, y >= 2, q > p^x
    PQR,                // n = pqr, complete characterisation
    TauFilter,          // tau(n) outside {12} u {composite >= 15}
    Oracle,
};

std::string_view rule_name(Rule r);
std::string_view decision_name(Decision d);

struct ClassVerdict {
    u64 n = 0;
    Decision decision = Decision::OracleNonMember;
    Rule rule = Rule::Oracle;
    std::optional<DeltaTriple> witness;

    bool member() const { return decision == Decision::Member || decision == Decision::OracleMember; }
};

enum class CrossCheck { Off, On };

#ifdef NDEBUG
inline constexpr CrossCheck kDefaultCrossCheck = CrossCheck::Off;
#else
inline constexpr CrossCheck kDefaultCrossCheck = CrossCheck::On;
#endif

/// With CrossCheck::On every rule-based verdict is compared against has_delta
/// and a disagreement throws VerificationError.
ClassVerdict classify(u64 n, CrossCheck check = kDefaultCrossCheck);
ClassVerdict classify(const Factorization& f, CrossCheck check = kDefaultCrossCheck);

/// Membership of p^k q. Throws DomainError unless p and q are prime and k >= 1.
bool pkq_member(u64 p, unsigned k, u64 q);

/// Membership of pqr for primes p < q < r. Throws DomainError otherwise.
bool pqr_member(u64 p, u64 q, u64 r);

/// False only when n is certainly not a member by the divisor-count
/// constraint; true means inconclusive.
bool tau_filter(u64 n);
bool tau_filter(const Factorization& f);

}  // namespace ndelta
