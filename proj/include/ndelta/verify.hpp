#pragma once

// Self-verification suites behind `ndelta verify`.

#include <string>
#include <string_view>
#include <vector>

#include "ndelta/delta.hpp"
#include "ndelta/polyfam.hpp"

namespace ndelta {

struct SuiteReport {
    std::string suite;
    u64 max = 0;
    u64 checked = 0;
    u64 failed = 0;
    std::vector<std::string> samples;  // first few failure descriptions

    bool ok() const { return failed == 0; }
};

/// Inequalities every Delta-triple must satisfy, as human-readable
/// violations (empty when all hold).
std::vector<std::string> triple_bound_violations(const DeltaTriple& t);

/// Per-member bounds on D*_n and D*_n cap D+_n.
std::vector<std::string> diff_set_bound_violations(const DivisorDiffSets& d);

/// Valid (a, b, c) with a in [1, 5], b in [-5, 5] and every admissible
/// 2b - c, whose n0 search stays under the cap.
std::vector<PolyFamily> family_grid();

/// The named families x(2x-1)(3x-2), (3x+4)(6x+7)(9x+10), x(x+2)(2x+1),
/// (x-1)(2x-5)(x-3).
std::vector<PolyFamily> named_families();

SuiteReport verify_bounds(u64 max);
SuiteReport verify_classification(u64 max);
SuiteReport verify_families(u64 max);
SuiteReport verify_graphs(u64 max);

inline constexpr std::string_view kSuiteNames[] = {"bounds", "classification", "families", "graphs"};

/// `suite` is one of kSuiteNames or "all". Throws DomainError otherwise.
std::vector<SuiteReport> run_suites(std::string_view suite, u64 max);

}  // namespace ndelta
