#pragma once

// From a Delta-triple of n to balanced split graphs whose factor graph is an
// n-simple triangle of type 0.

#include <vector>

#include "ndelta/delta.hpp"
#include "ndelta/graphs.hpp"

namespace ndelta {

/// Degrees and pairwise overlaps of the three I-vertices a, b, c.
struct RealizationParams {
    DeltaTriple triple;
    u64 d_a = 0;
    u64 d_b = 0;  ///< d_a + n/z - z
    u64 d_c = 0;  ///< d_a + n/x - x
    u64 eta_ab = 0;
    u64 eta_bc = 0;
    u64 eta_ac = 0;
    u64 eta_abc = 0;
    u64 k_size = 0;  ///< n/x + z + y + eta_abc
};

/// Venn-cell sizes of K in layout order.
struct VennCells {
    u64 a_only = 0;
    u64 ab = 0;
    u64 ac = 0;
    u64 abc = 0;
    u64 b_only = 0;
    u64 bc = 0;
    u64 c_only = 0;
};

/// eta_abc is set to its floor max(0, d_a - x - z). Throws DomainError when
/// the triple is invalid, d_a < z, or a Venn cell would be negative.
RealizationParams realization_params(const DeltaTriple& triple, u64 d_a);

VennCells venn_cells(const RealizationParams& p);

/// K is laid out as consecutive intervals a-only, ab, ac, abc, b-only, bc,
/// c-only; I = {a, b, c}. The result is checked (degrees, all sigma = n,
/// type 0, balanced) and VerificationError is thrown on any mismatch.
SplitGraph realize_graph(const RealizationParams& p);

/// Realisations for d_a in [z, x + z] in which every vertex is active.
std::vector<SplitGraph> active_realizations(const DeltaTriple& triple);

}  // namespace ndelta
