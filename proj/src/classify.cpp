#include "ndelta/classify.hpp"

#include <string>

#include "ndelta/error.hpp"

namespace ndelta {

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::TwoOdd: return "TwoOdd";
        case Rule::PrimePower: return "PrimePower";
        case Rule::TwoPrimesLowExp: return "TwoPrimesLowExp";
        case Rule::PkQ: return "PkQ";
        case Rule::DominatingPrime: return "DominatingPrime";
        case Rule::TwoPrimeDominated: return "TwoPrimeDominated";
        case Rule::PQR: return "PQR";
        case Rule::TauFilter: return "TauFilter";
        case Rule::Oracle: return "Oracle";
    }
    return "Unknown";
}

std::string_view decision_name(Decision d) {
    switch (d) {
        case Decision::Member: return "Member";
        case Decision::NonMember: return "NonMember";
        case Decision::OracleMember: return "OracleMember";
        case Decision::OracleNonMember: return "OracleNonMember";
    }
    return "Unknown";
}

bool pkq_member(u64 p, unsigned k, u64 q) {
    if (!is_prime(p) || !is_prime(q)) throw DomainError("pkq_member: p and q must be prime");
    if (k < 1) throw DomainError("pkq_member: k must be >= 1");
    return p == 2 && (q == 3 || q == 5) && k % 2 == 1 && k >= 3;
}

bool pqr_member(u64 p, u64 q, u64 r) {
    if (!is_prime(p) || !is_prime(q) || !is_prime(r)) throw DomainError("pqr_member: arguments must be prime");
    if (!(p < q && q < r)) throw DomainError("pqr_member: need p < q < r");
    if ((q == p + 2 && r == 2 * p + 1) || (q == 2 * p - 1 && r == 3 * p - 2)) return true;
    return static_cast<u128>(r - p + 1) * (q - p + 1) == static_cast<u128>(p) * p - p + 1;
}

namespace {

bool is_pqr(const Factorization& f) {
    return f.omega() == 3 && f.factors[0].exponent == 1 && f.factors[1].exponent == 1 &&
           f.factors[2].exponent == 1;
}

bool composite(u64 k) { return k >= 4 && !is_prime(k); }

}  // namespace

bool tau_filter(const Factorization& f) {
    if (f.n == 24 || f.n == 40 || is_pqr(f)) return true;
    const u64 t = tau(f);
    return t == 12 || (t >= 15 && composite(t));
}

bool tau_filter(u64 n) { return tau_filter(factorize(n)); }

namespace {

// p^e as u128, saturating well above the ceiling.
u128 power(u64 p, unsigned e) {
    u128 v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= p;
        if (v > static_cast<u128>(kCeiling) * 4) break;
    }
    return v;
}

DeltaTriple scaled(const DeltaTriple& base, u64 n, u64 alpha) {
    return {n, base.x * alpha, base.y * alpha, base.z * alpha};
}

// Witness for 2^(2h+1) q, q in {3, 5}: the base triple of 24 or 40 scaled by 2^(h-1).
DeltaTriple pkq_witness(u64 n, unsigned k, u64 q) {
    const DeltaTriple base = q == 3 ? DeltaTriple{24, 2, 3, 3} : DeltaTriple{40, 4, 5, 5};
    return scaled(base, n, u64{1} << ((k - 3) / 2));
}

// Each branch of the pqr characterisation names the divisors that realise it.
std::optional<DeltaTriple> pqr_witness(u64 n, u64 p, u64 q, u64 r) {
    for (const DeltaTriple& t : {DeltaTriple{n, p, q, r}, DeltaTriple{n, p, q, q}, DeltaTriple{n, q, r, r}})
        if (is_delta_triple(t)) return t;
    return std::nullopt;
}

std::optional<ClassVerdict> apply_rules(const Factorization& f) {
    const u64 n = f.n;
    const auto& fs = f.factors;
    auto non_member = [n](Rule r) { return ClassVerdict{n, Decision::NonMember, r, std::nullopt}; };

    if (!fs.empty() && fs[0].prime == 2 && fs[0].exponent == 1) return non_member(Rule::TwoOdd);
    if (f.omega() == 1) return non_member(Rule::PrimePower);
    if (f.omega() == 2 && fs[0].exponent <= 2 && fs[1].exponent <= 2) return non_member(Rule::TwoPrimesLowExp);
    if (f.omega() == 2 && (fs[0].exponent == 1 || fs[1].exponent == 1)) {
        // n = p^k q with the single power on q; when both exponents are 1 the
        // previous rule already fired.
        const PrimePower& pk = fs[0].exponent == 1 ? fs[1] : fs[0];
        const PrimePower& q = fs[0].exponent == 1 ? fs[0] : fs[1];
        if (pkq_member(pk.prime, pk.exponent, q.prime))
            return ClassVerdict{n, Decision::Member, Rule::PkQ, pkq_witness(n, pk.exponent, q.prime)};
        return non_member(Rule::PkQ);
    }
    const u64 largest = fs.back().prime;
    if (largest >= n / largest) return non_member(Rule::DominatingPrime);
    if (f.omega() == 2) {
        for (int i = 0; i < 2; ++i) {
            const PrimePower& px = fs[static_cast<std::size_t>(i)];
            const PrimePower& qy = fs[static_cast<std::size_t>(1 - i)];
            if (qy.exponent >= 2 && qy.prime > power(px.prime, px.exponent))
                return non_member(Rule::TwoPrimeDominated);
        }
    }
    if (is_pqr(f)) {
        const u64 p = fs[0].prime, q = fs[1].prime, r = fs[2].prime;
        if (!pqr_member(p, q, r)) return non_member(Rule::PQR);
        const auto w = pqr_witness(n, p, q, r);
        if (!w) throw VerificationError("no witness for pqr member " + std::to_string(n));
        return ClassVerdict{n, Decision::Member, Rule::PQR, w};
    }
    if (!tau_filter(f)) return non_member(Rule::TauFilter);
    return std::nullopt;
}

}  // namespace

ClassVerdict classify(const Factorization& f, CrossCheck check) {
    if (f.n < 2) throw DomainError("classify: n must be >= 2");
    if (auto v = apply_rules(f)) {
        if (v->witness && !is_delta_triple(*v->witness))
            throw VerificationError("rule " + std::string(rule_name(v->rule)) + " produced an invalid witness");
        if (check == CrossCheck::On && v->member() != has_delta(f))
            throw VerificationError("rule " + std::string(rule_name(v->rule)) + " contradicts the oracle at " +
                                    std::to_string(f.n));
        return *v;
    }
    const auto triples = delta_triples(f);
    if (triples.empty()) return {f.n, Decision::OracleNonMember, Rule::Oracle, std::nullopt};
    return {f.n, Decision::OracleMember, Rule::Oracle, triples.front()};
}

ClassVerdict classify(u64 n, CrossCheck check) { return classify(factorize(n), check); }

}  // namespace ndelta
