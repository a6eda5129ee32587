#include "ndelta/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "ndelta/classify.hpp"
#include "ndelta/error.hpp"
#include "ndelta/graphs.hpp"
#include "ndelta/realize.hpp"

namespace ndelta {

namespace {

constexpr std::size_t kSampleLimit = 5;
constexpr u64 kGraphSeed = 0x5eed2013;

class Tally {
public:
    Tally(std::string suite, u64 max) {
        report_.suite = std::move(suite);
        report_.max = max;
    }

    void check(bool ok, const std::string& what) {
        ++report_.checked;
        if (ok) return;
        ++report_.failed;
        if (report_.samples.size() < kSampleLimit) report_.samples.push_back(what);
    }

    // Runs fn, counting an escaped library exception as a failure.
    template <class Fn>
    void guarded(const std::string& what, Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

std::string triple_text(const DeltaTriple& t) {
    return std::to_string(t.n) + ":(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) +
           ")";
}

bool composite(u64 k) { return k >= 4 && !is_prime(k); }

// Regime maximum for x, or nullopt when it exceeds the ceiling.
std::optional<ExtremalBound> bound_or_none(u64 x, Regime r) {
    try {
        return extremal_bound(x, r);
    } catch (const OverflowError&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<std::string> triple_bound_violations(const DeltaTriple& t) {
    std::vector<std::string> out;
    const auto fail = [&](const char* what) { out.push_back(triple_text(t) + " " + what); };
    const u64 x = t.x, y = t.y, z = t.z;
    const u128 n = t.n;
    if (!(1 < x && x < y && y <= z)) fail("breaks 1 < x < y <= z");
    if (!(static_cast<u128>(z) * z < n)) fail("breaks z < sqrt(n)");
    if (!(y < 2 * x)) fail("breaks y/x < 2");
    if (y % x == 0) fail("has x | y");
    if (!(static_cast<u128>(z) < static_cast<u128>(x) * (x + 1))) fail("breaks z < x(x+1)");
    if (const u64 q = z / x; !(1 <= q && q <= x)) fail("breaks 1 <= floor(z/x) <= x");
    if (const u64 q = z / y; !(1 <= q && q < x)) fail("breaks 1 <= floor(z/y) < x");
    if (!(static_cast<u128>(z) * std::gcd(x, y) < static_cast<u128>(x) * y)) fail("breaks z gcd(x,y) < xy");

    if (y == z) {
        if (auto b = bound_or_none(x, Regime::Duplicated)) {
            if (t.n > b->bound) fail("exceeds the duplicated maximum");
            if ((t.n == b->bound) != (y == 2 * x - 1)) fail("duplicated equality case mismatch");
        } else if (y == 2 * x - 1) {
            fail("duplicated extremal triple beyond the ceiling");
        }
    } else {
        if (auto b = bound_or_none(x, Regime::Generic)) {
            if (t.n > b->bound) fail("exceeds the generic maximum");
            if ((t.n == b->bound) != (y == x + 1 && z == x * (x + 1) - 1)) fail("generic equality case mismatch");
        } else if (y == x + 1 && z == x * (x + 1) - 1) {
            fail("generic extremal triple beyond the ceiling");
        }
    }
    return out;
}

std::vector<std::string> diff_set_bound_violations(const DivisorDiffSets& d) {
    std::vector<std::string> out;
    const u128 n = d.n;
    if (d.dstar.size() >= 2) {
        const u128 second = d.dstar[d.dstar.size() - 2];
        // max(D* \ {n-1}) <= n/2 - 2, i.e. 2 m <= n - 4
        if (2 * second + 4 > n) out.push_back(std::to_string(d.n) + ": second largest of D* exceeds n/2 - 2");
    }
    std::vector<u64> both;
    std::set_intersection(d.dstar.begin(), d.dstar.end(), d.dplus.begin(), d.dplus.end(), std::back_inserter(both));
    // max(D* cap D+) <= 2n/3 - 6, i.e. 3 m <= 2n - 18
    if (!both.empty() && 3 * static_cast<u128>(both.back()) + 18 > 2 * n)
        out.push_back(std::to_string(d.n) + ": max of D* cap D+ exceeds 2n/3 - 6");
    return out;
}

std::vector<PolyFamily> family_grid() {
    std::vector<PolyFamily> out;
    for (i64 a = 1; a <= 5; ++a)
        for (i64 b = -5; b <= 5; ++b)
            for (i64 m = 1; m <= 3 * a; ++m) {
                if ((3 * a) % m != 0) continue;
                const i64 c = 2 * b - m;
                if ((2 * c - b) % m != 0) continue;
                try {
                    out.push_back(make_family(a, b, c));
                } catch (const DomainError&) {
                    // n0 beyond the scan cap
                }
            }
    return out;
}

std::vector<PolyFamily> named_families() {
    return {make_family(1, 0, -1), make_family(3, 4, 7), make_family(1, 2, 1), make_family(1, -1, -5)};
}

SuiteReport verify_bounds(u64 max) {
    Tally tally("bounds", max);
    for (u64 n = 2; n <= max; ++n) {
        tally.guarded(std::to_string(n), [&] {
            const auto triples = delta_triples(n);
            for (const DeltaTriple& t : triples) {
                const auto v = triple_bound_violations(t);
                tally.check(v.empty(), v.empty() ? "" : v.front());
                if (t.duplicated()) {
                    tally.guarded("descent " + triple_text(t), [&] {
                        descent_witness(t.n, t.x, t.y);
                        tally.check(true, "");
                    });
                }
            }
            if (!triples.empty()) {
                const auto v = diff_set_bound_violations(divisor_diff_sets(n));
                tally.check(v.empty(), v.empty() ? "" : v.front());
            }
        });
    }
    return tally.take();
}

SuiteReport verify_classification(u64 max) {
    Tally tally("classification", max);
    for (u64 n = 2; n <= max; ++n) {
        tally.guarded(std::to_string(n), [&] {
            const Factorization f = factorize(n);
            const bool by_sets = has_delta(f);
            const bool by_triples = !delta_triples(f).empty();
            const ClassVerdict v = classify(f, CrossCheck::On);
            tally.check(by_sets == by_triples && by_sets == v.member(),
                        std::to_string(n) + ": membership paths disagree");
            if (by_sets && n != 24 && n != 40) {
                const bool pqr = f.omega() == 3 && is_squarefree(n);
                const u64 t = tau(f);
                tally.check(pqr || t == 12 || (t >= 15 && composite(t)), std::to_string(n) + ": tau outside the allowed set");
            }
        });
    }

    // p^k q against the oracle, within the ceiling.
    for (u64 p = 2; p < 50; ++p) {
        if (!is_prime(p)) continue;
        for (u64 q = 2; q < 50; ++q) {
            if (!is_prime(q) || q == p) continue;
            u128 pk = 1;
            for (unsigned k = 1; k <= 8; ++k) {
                pk *= p;
                const u128 n = pk * q;
                if (n > kCeiling) break;
                tally.guarded("pkq", [&] {
                    tally.check(pkq_member(p, k, q) == has_delta(static_cast<u64>(n)),
                                std::to_string(p) + "^" + std::to_string(k) + "*" + std::to_string(q) + ": rule disagrees");
                });
            }
        }
    }

    std::vector<u64> primes;
    for (u64 p = 2; p < 100; ++p)
        if (is_prime(p)) primes.push_back(p);
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            for (std::size_t k = j + 1; k < primes.size(); ++k) {
                const u64 p = primes[i], q = primes[j], r = primes[k];
                tally.guarded("pqr", [&] {
                    tally.check(pqr_member(p, q, r) == has_delta(p * q * r),
                                std::to_string(p * q * r) + ": pqr rule disagrees");
                });
            }
    return tally.take();
}

SuiteReport verify_families(u64 max) {
    Tally tally("families", max);
    auto fams = named_families();
    const auto grid = family_grid();
    fams.insert(fams.end(), grid.begin(), grid.end());
    for (const PolyFamily& f : fams) {
        const std::string name = "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
        tally.guarded(name, [&] {
            for (const FamilyValue& fv : family_members(f, 21)) tally.check(has_delta(fv.n), name + " at " + std::to_string(fv.x));
        });
    }
    const PolyFamily dup = make_family(1, 0, -1);
    for (u64 x = std::max<u64>(2, dup.n0); x <= 200; ++x)
        tally.check(family_value(dup, static_cast<i64>(x)) == extremal_bound(x, Regime::Duplicated).bound,
                    "duplicated family differs from the extremal value at " + std::to_string(x));

    // n = xyz exactly when the xyz identity holds.
    for (u64 n = 2; n <= max; ++n) {
        tally.guarded(std::to_string(n), [&] {
            for (const DeltaTriple& t : delta_triples(n)) {
                const bool is_product = static_cast<u128>(t.x) * t.y * t.z == n;
                tally.check(xyz_identity_holds(t.x, t.y, t.z) == is_product, triple_text(t) + ": xyz identity mismatch");
            }
        });
    }
    return tally.take();
}

SuiteReport verify_graphs(u64 max) {
    Tally tally("graphs", max);

    auto check_graph = [&](const SplitGraph& s, const std::string& name, bool with_oracle) {
        u64 total = 0;
        for (std::size_t u = 0; u < s.i_size(); ++u)
            for (std::size_t v = u + 1; v < s.i_size(); ++v) {
                const u64 sg = sigma(s, u, v);
                total += sg;
                if (with_oracle) tally.check(sg == sigma_oracle(s, u, v), name + ": sigma differs from the oracle");
                if (sg == 0) continue;
                const u64 du = s.i_degree(u), dv = s.i_degree(v);
                const u64 gap = du > dv ? du - dv : dv - du;
                const auto dstar = divisor_diff_sets(std::max<u64>(sg, 2)).dstar;
                const bool in_dstar = sg == 1 ? gap == 0 : std::binary_search(dstar.begin(), dstar.end(), gap);
                tally.check(in_dstar && gap + 1 <= sg, name + ": degree gap not in D*_sigma");
            }
        if (with_oracle) tally.check(total == two_switch_count_oracle(s), name + ": switch count differs from the oracle");
        tally.check(factor_graph(s).weighted_edge_count() == total, name + ": Phi weight differs from the sigma sum");

        std::vector<u64> mults;
        const FactorGraph phi = factor_graph(s);
        for (std::size_t u = 0; u < phi.size(); ++u)
            for (std::size_t v = u + 1; v < phi.size(); ++v)
                if (phi.at(u, v) > 0) mults.push_back(phi.at(u, v));
        std::sort(mults.begin(), mults.end());
        mults.erase(std::unique(mults.begin(), mults.end()), mults.end());
        for (u64 n : mults) {
            const bool obstructed = n >= 2 && !is_perfect_square(n) && !has_delta(n);
            for (const auto& cyc : n_simple_induced_cycles(s, n)) {
                tally.check(cyc.size() <= 4, name + ": induced cycle longer than 4");
                if (obstructed) tally.check(cyc.size() != 3, name + ": n-simple triangle for a non-member");
            }
        }
    };

    std::mt19937_64 rng(kGraphSeed);
    const u64 random_count = std::min<u64>(max, 500);
    for (u64 i = 0; i < random_count; ++i) {
        const SplitGraph s = random_split_graph(rng, 12, 4);
        tally.guarded("random " + std::to_string(i), [&] { check_graph(s, "random " + std::to_string(i), true); });
    }

    // Round trip from triples to graphs and back to D* cap D+.
    const u64 nmax = std::min<u64>(max, 5000);
    for (u64 n = 2; n <= nmax; ++n) {
        const auto triples = delta_triples(n);
        if (triples.empty()) continue;
        const DivisorDiffSets sets = divisor_diff_sets(n);
        for (const DeltaTriple& t : triples) {
            for (u64 d_a : {t.z, t.z + 1, t.x + t.z}) {
                const std::string name = triple_text(t) + " dA=" + std::to_string(d_a);
                tally.guarded(name, [&] {
                    const RealizationParams p = realization_params(t, d_a);
                    const SplitGraph s = realize_graph(p);
                    tally.check(is_n_simple_type0_triangle(s, n), name + ": not an n-simple type-0 triangle");
                    const u64 gap = p.d_c - p.d_a;
                    tally.check(std::binary_search(sets.dstar.begin(), sets.dstar.end(), gap) &&
                                    std::binary_search(sets.dplus.begin(), sets.dplus.end(), gap),
                                name + ": dC - dA not in D* cap D+");
                    if (s.k_size() <= 120) check_graph(s, name, true);
                });
            }
            if (n <= 1000) {
                tally.guarded("active " + triple_text(t), [&] {
                    const auto graphs = active_realizations(t);
                    tally.check(!graphs.empty(), triple_text(t) + ": no active realisation");
                });
            }
        }
    }
    return tally.take();
}

std::vector<SuiteReport> run_suites(std::string_view suite, u64 max) {
    std::vector<SuiteReport> out;
    const bool all = suite == "all";
    if (all || suite == "bounds") out.push_back(verify_bounds(max));
    if (all || suite == "classification") out.push_back(verify_classification(max));
    if (all || suite == "families") out.push_back(verify_families(max));
    if (all || suite == "graphs") out.push_back(verify_graphs(max));
    if (out.empty()) throw DomainError("unknown suite '" + std::string(suite) + "'");
    return out;
}

}  // namespace ndelta
