#pragma once

// The Delta property: n has it when some difference of complementary divisors
// of n equals a sum of two nonzero such differences.

#include <compare>
#include <optional>
#include <vector>

#include "ndelta/arith.hpp"

namespace ndelta {

/// Divisors 1 < x < y <= z < sqrt(n) of n with n/x - x = (n/y - y) + (n/z - z).
struct DeltaTriple {
    u64 n = 0;
    u64 x = 0;
    u64 y = 0;
    u64 z = 0;

    bool duplicated() const { return y == z; }
    friend auto operator<=>(const DeltaTriple&, const DeltaTriple&) = default;
};

/// Full check of the defining conditions, including the cross-multiplied
/// identity (xy + xz - yz) n = xyz (z + y - x) evaluated in 128 bits.
bool is_delta_triple(u64 n, u64 x, u64 y, u64 z);
inline bool is_delta_triple(const DeltaTriple& t) { return is_delta_triple(t.n, t.x, t.y, t.z); }

struct DivisorDiffSets {
    u64 n = 0;
    std::vector<u64> dstar;  ///< { |a - b| : ab = n }, ascending
    std::vector<u64> dplus;  ///< { s + t : s, t in dstar, s, t > 0 }, ascending
};

DivisorDiffSets divisor_diff_sets(u64 n);

/// Divisors d of n with d * d < n, ascending.
std::vector<u64> small_divisors(const Factorization& f);

/// Decides the property from D*_n alone, without materialising D+_n.
bool has_delta(u64 n);
bool has_delta(const Factorization& f);

/// Every Delta-triple of n, lexicographic.
std::vector<DeltaTriple> delta_triples(u64 n);
std::vector<DeltaTriple> delta_triples(const Factorization& f);

/// Members of N(Delta) in [2, limit], ascending.
std::vector<u64> delta_set(u64 limit);

/// Member not of the form alpha^2 m with alpha >= 2 and m a member.
bool is_primitive(u64 n);

struct PrimitiveDecomposition {
    u64 n = 0;
    u64 alpha = 0;
    u64 m = 0;

    friend auto operator<=>(const PrimitiveDecomposition&, const PrimitiveDecomposition&) = default;
};

/// All n = alpha^2 m with m primitive, ordered by ascending m.
/// Throws DomainError when n lacks the property.
std::vector<PrimitiveDecomposition> primitive_decompositions(u64 n);

/// The triple (x, y, z) with the unique n it determines, or nullopt when no
/// natural n makes it a Delta-triple.
std::optional<DeltaTriple> triple_for(u64 x, u64 y, u64 z);

/// Every Delta-triple having t as a component, each paired with the n it
/// determines. Lexicographic in (x, y, z).
std::vector<DeltaTriple> triples_with_component(u64 t);

/// Arithmetic structure of a duplicated triple (x, y, y):
/// x = d a, y = d b, gcd(a, b) = 1 and (2a - b) n = d^2 ab (2b - a).
struct DescentWitness {
    u64 n = 0;
    u64 x = 0;
    u64 y = 0;
    u64 d = 0;
    u64 a = 0;
    u64 b = 0;
    u64 gcd_factor = 0;  ///< gcd(2a - b, ab (2b - a)); divides 6
};

/// Throws DomainError when (x, y, y) is not a triple of n and
/// VerificationError if any of the three descent identities fails.
DescentWitness descent_witness(u64 n, u64 x, u64 y);

enum class Regime { Duplicated, Generic };

struct ExtremalBound {
    u64 bound = 0;
    DeltaTriple triple;
};

/// Largest n admitting a triple with smallest component x in the given regime,
/// together with the unique triple attaining it.
ExtremalBound extremal_bound(u64 x, Regime regime);

/// (y - x + 1)(z - x + 1) == x^2 - x + 1. For a triple of n this holds exactly
/// when n == xyz.
bool xyz_identity_holds(u64 x, u64 y, u64 z);

struct DoubleRepresentation {
    u64 a = 0;
    u64 b = 0;
    u64 n = 0;
};

/// Given distinct primitive squares m and l, the k-th common multiple
/// n = a^2 m = b^2 l.
DoubleRepresentation double_representation(u64 m, u64 l, u64 k);

/// Primitives <= limit with square-free part s, ascending.
std::vector<u64> primitives_with_squarefree_part(u64 s, u64 limit);

}  // namespace ndelta
