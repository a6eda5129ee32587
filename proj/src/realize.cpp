#include "ndelta/realize.hpp"

#include <string>

#include "ndelta/error.hpp"

namespace ndelta {

namespace {

std::string describe(const DeltaTriple& t) {
    return "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," + std::to_string(t.z) + ") for n = " +
           std::to_string(t.n);
}

// Signed cell sizes, so that infeasible layouts surface instead of wrapping.
struct SignedCells {
    i128 a_only, ab, ac, abc, b_only, bc, c_only;
};

SignedCells signed_cells(const RealizationParams& p) {
    const auto s = [](u64 v) { return static_cast<i128>(v); };
    return {s(p.d_a) - s(p.eta_ab) - s(p.eta_ac) + s(p.eta_abc),
            s(p.eta_ab) - s(p.eta_abc),
            s(p.eta_ac) - s(p.eta_abc),
            s(p.eta_abc),
            s(p.d_b) - s(p.eta_ab) - s(p.eta_bc) + s(p.eta_abc),
            s(p.eta_bc) - s(p.eta_abc),
            s(p.d_c) - s(p.eta_ac) - s(p.eta_bc) + s(p.eta_abc)};
}

}  // namespace

RealizationParams realization_params(const DeltaTriple& t, u64 d_a) {
    if (!is_delta_triple(t)) throw DomainError("realization_params: " + describe(t) + " is not a Delta-triple");
    if (d_a < t.z) throw DomainError("realization_params: d_a = " + std::to_string(d_a) + " is below z = " +
                                     std::to_string(t.z));
    const u64 n = t.n;
    RealizationParams p;
    p.triple = t;
    p.d_a = d_a;
    p.d_b = checked_add(d_a, n / t.z - t.z);
    p.d_c = checked_add(d_a, n / t.x - t.x);
    p.eta_ab = d_a - t.z;
    p.eta_bc = checked_add(d_a, n / t.z - t.z) - t.y;
    p.eta_ac = d_a - t.x;
    p.eta_abc = d_a > t.x + t.z ? d_a - t.x - t.z : 0;
    p.k_size = checked_add(checked_add(n / t.x, t.z + t.y), p.eta_abc);

    const SignedCells c = signed_cells(p);
    for (i128 v : {c.a_only, c.ab, c.ac, c.abc, c.b_only, c.bc, c.c_only})
        if (v < 0) throw DomainError("realization_params: negative Venn cell for " + describe(t));
    const i128 total = c.a_only + c.ab + c.ac + c.abc + c.b_only + c.bc + c.c_only;
    if (total != static_cast<i128>(p.k_size))
        throw VerificationError("Venn cells do not add up to |K| for " + describe(t));
    return p;
}

VennCells venn_cells(const RealizationParams& p) {
    const SignedCells c = signed_cells(p);
    for (i128 v : {c.a_only, c.ab, c.ac, c.abc, c.b_only, c.bc, c.c_only})
        if (v < 0) throw DomainError("venn_cells: negative cell");
    const auto u = [](i128 v) { return static_cast<u64>(v); };
    return {u(c.a_only), u(c.ab), u(c.ac), u(c.abc), u(c.b_only), u(c.bc), u(c.c_only)};
}

SplitGraph realize_graph(const RealizationParams& p) {
    const VennCells cells = venn_cells(p);
    std::vector<std::vector<std::size_t>> nbhd(3);
    std::size_t next = 1;
    auto place = [&](u64 size, std::initializer_list<int> owners) {
        for (u64 i = 0; i < size; ++i, ++next)
            for (int o : owners) nbhd[static_cast<std::size_t>(o)].push_back(next);
    };
    place(cells.a_only, {0});
    place(cells.ab, {0, 1});
    place(cells.ac, {0, 2});
    place(cells.abc, {0, 1, 2});
    place(cells.b_only, {1});
    place(cells.bc, {1, 2});
    place(cells.c_only, {2});
    if (next - 1 != p.k_size) throw VerificationError("realize_graph: layout size differs from |K|");

    SplitGraph s(p.k_size, {"a", "b", "c"}, nbhd);
    const u64 n = p.triple.n;
    if (s.i_degree(0) != p.d_a || s.i_degree(1) != p.d_b || s.i_degree(2) != p.d_c)
        throw VerificationError("realize_graph: degrees differ from the parameters");
    if (s.eta(0, 1) != p.eta_ab || s.eta(1, 2) != p.eta_bc || s.eta(0, 2) != p.eta_ac)
        throw VerificationError("realize_graph: overlaps differ from the parameters");
    if (!is_n_simple_type0_triangle(s, n))
        throw VerificationError("realize_graph: Phi is not an n-simple type-0 triangle for " + describe(p.triple));
    if (!is_balanced(s)) throw VerificationError("realize_graph: graph is not balanced");
    return s;
}

std::vector<SplitGraph> active_realizations(const DeltaTriple& t) {
    std::vector<SplitGraph> out;
    for (u64 d_a = t.z; d_a <= t.x + t.z; ++d_a) {
        SplitGraph s = realize_graph(realization_params(t, d_a));
        const GraphStats st = graph_stats(s);
        if (!st.all_active) continue;
        if (!st.indecomposable_active)
            throw VerificationError("active realisation with disconnected Phi for " + describe(t));
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace ndelta
