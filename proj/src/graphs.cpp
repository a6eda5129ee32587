#include "ndelta/graphs.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <tuple>

#include "ndelta/error.hpp"
#include "ndelta/simd.hpp"

namespace ndelta {

SplitGraph::SplitGraph(std::size_t k_size, std::vector<std::string> labels,
                       const std::vector<std::vector<std::size_t>>& neighborhoods)
    : k_size_(k_size), words_((k_size + 63) / 64), labels_(std::move(labels)) {
    if (labels_.size() != neighborhoods.size())
        throw DomainError("split graph: " + std::to_string(labels_.size()) + " labels for " +
                          std::to_string(neighborhoods.size()) + " neighbourhoods");
    std::set<std::string> seen;
    for (const auto& l : labels_)
        if (!seen.insert(l).second) throw DomainError("split graph: duplicate I-label '" + l + "'");
    bits_.assign(labels_.size() * words_, 0);
    for (std::size_t v = 0; v < neighborhoods.size(); ++v) {
        for (std::size_t k : neighborhoods[v]) {
            if (k < 1 || k > k_size_)
                throw DomainError("split graph: K label " + std::to_string(k) + " outside 1.." +
                                  std::to_string(k_size_));
            std::uint64_t& w = bits_[v * words_ + (k - 1) / 64];
            const std::uint64_t bit = std::uint64_t{1} << ((k - 1) % 64);
            if (w & bit) throw DomainError("split graph: K label " + std::to_string(k) + " repeated in N_" + labels_[v]);
            w |= bit;
        }
    }
}

SplitGraph SplitGraph::with_default_labels(std::size_t k_size,
                                           const std::vector<std::vector<std::size_t>>& neighborhoods) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < neighborhoods.size(); ++i) labels.push_back("v" + std::to_string(i + 1));
    return SplitGraph(k_size, std::move(labels), neighborhoods);
}

std::span<const std::uint64_t> SplitGraph::bits(std::size_t v) const {
    return {bits_.data() + v * words_, words_};
}

std::vector<std::size_t> SplitGraph::neighborhood(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 1; k <= k_size_; ++k)
        if (i_adjacent(v, k)) out.push_back(k);
    return out;
}

bool SplitGraph::i_adjacent(std::size_t v, std::size_t k_label) const {
    const std::size_t b = k_label - 1;
    return (bits_[v * words_ + b / 64] >> (b % 64)) & 1U;
}

u64 SplitGraph::i_degree(std::size_t v) const {
    const auto b = bits(v);
    return simd::and_popcount(b, b);
}

u64 SplitGraph::k_degree(std::size_t k_label) const {
    u64 d = k_size_ - 1;
    for (std::size_t v = 0; v < i_size(); ++v) d += i_adjacent(v, k_label) ? 1 : 0;
    return d;
}

u64 SplitGraph::eta(std::size_t u, std::size_t v) const { return simd::and_popcount(bits(u), bits(v)); }

bool SplitGraph::adjacent(std::size_t p, std::size_t q) const {
    if (p == q) return false;
    const bool pi = is_i_vertex(p);
    const bool qi = is_i_vertex(q);
    if (!pi && !qi) return true;
    if (pi && qi) return false;
    return pi ? i_adjacent(p - k_size_, q + 1) : i_adjacent(q - k_size_, p + 1);
}

namespace {

void require_i_pair(const SplitGraph& s, std::size_t u, std::size_t v) {
    if (u >= s.i_size() || v >= s.i_size())
        throw DomainError("expected I-vertices, got indices " + std::to_string(u) + " and " + std::to_string(v));
    if (u == v) throw DomainError("expected two distinct I-vertices");
}

// Calls fn(quadruple) for each 4-subset of vertices containing at least two
// I-vertices. Other quadruples carry no 2-switch: the two added edges are
// disjoint non-edges, and every non-edge of a split graph meets I.
template <typename Fn>
void for_each_switch_quadruple(const SplitGraph& s, Fn&& fn) {
    const std::size_t k = s.k_size();
    const std::size_t ni = s.i_size();
    for (std::size_t i1 = 0; i1 < ni; ++i1) {
        for (std::size_t i2 = i1 + 1; i2 < ni; ++i2) {
            const std::size_t g1 = k + i1, g2 = k + i2;
            for (std::size_t a = 0; a < k; ++a)
                for (std::size_t b = a + 1; b < k; ++b) fn(std::array<std::size_t, 4>{a, b, g1, g2});
            for (std::size_t i3 = i2 + 1; i3 < ni; ++i3) {
                for (std::size_t a = 0; a < k; ++a) fn(std::array<std::size_t, 4>{a, g1, g2, k + i3});
                for (std::size_t i4 = i3 + 1; i4 < ni; ++i4)
                    fn(std::array<std::size_t, 4>{g1, g2, k + i3, k + i4});
            }
        }
    }
}

}  // namespace

u64 switches_on_quadruple(const SplitGraph& s, const std::array<std::size_t, 4>& q) {
    // The three perfect matchings of the quadruple. A 2-switch removes one
    // matching (both edges present) and adds another (both edges absent).
    const std::array<std::array<std::size_t, 4>, 3> matchings{{
        {q[0], q[1], q[2], q[3]},
        {q[0], q[2], q[1], q[3]},
        {q[0], q[3], q[1], q[2]},
    }};
    std::array<bool, 3> present{};
    std::array<bool, 3> absent{};
    for (std::size_t m = 0; m < 3; ++m) {
        const auto& e = matchings[m];
        const bool e1 = s.adjacent(e[0], e[1]);
        const bool e2 = s.adjacent(e[2], e[3]);
        present[m] = e1 && e2;
        absent[m] = !e1 && !e2;
    }
    u64 count = 0;
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t a = 0; a < 3; ++a)
            if (r != a && present[r] && absent[a]) ++count;
    return count;
}

u64 sigma(const SplitGraph& s, std::size_t u, std::size_t v) {
    require_i_pair(s, u, v);
    const u64 eta = s.eta(u, v);
    return (s.i_degree(u) - eta) * (s.i_degree(v) - eta);
}

u64 sigma_oracle(const SplitGraph& s, std::size_t u, std::size_t v) {
    require_i_pair(s, u, v);
    const std::size_t gu = s.k_size() + u;
    const std::size_t gv = s.k_size() + v;
    const std::size_t total = s.vertex_count();
    u64 count = 0;
    for (std::size_t w1 = 0; w1 < total; ++w1) {
        if (w1 == gu || w1 == gv) continue;
        for (std::size_t w2 = w1 + 1; w2 < total; ++w2) {
            if (w2 == gu || w2 == gv) continue;
            count += switches_on_quadruple(s, {gu, gv, w1, w2});
        }
    }
    return count;
}

u64 two_switch_count_oracle(const SplitGraph& s) {
    u64 count = 0;
    for_each_switch_quadruple(s, [&](const std::array<std::size_t, 4>& q) { count += switches_on_quadruple(s, q); });
    return count;
}

u64 FactorGraph::weighted_edge_count() const {
    u64 total = 0;
    for (std::size_t u = 0; u < size(); ++u)
        for (std::size_t v = u + 1; v < size(); ++v) total += at(u, v);
    return total;
}

bool FactorGraph::connected() const {
    if (size() <= 1) return true;
    std::vector<bool> seen(size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < size(); ++v) {
            if (!seen[v] && at(u, v) > 0) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == size();
}

FactorGraph factor_graph(const SplitGraph& s) {
    FactorGraph phi;
    phi.labels = s.labels();
    const std::size_t n = s.i_size();
    phi.multiplicity.assign(n * n, 0);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const u64 m = sigma(s, u, v);
            phi.multiplicity[u * n + v] = m;
            phi.multiplicity[v * n + u] = m;
        }
    }
    return phi;
}

std::vector<std::pair<std::size_t, std::size_t>> flow_orientation(const SplitGraph& s) {
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    for (std::size_t u = 0; u < s.i_size(); ++u)
        for (std::size_t v = 0; v < s.i_size(); ++v)
            if (u != v && s.i_degree(u) <= s.i_degree(v) && sigma(s, u, v) > 0) arcs.emplace_back(u, v);
    return arcs;
}

std::string_view triangle_type_name(TriangleType t) {
    switch (t) {
        case TriangleType::Delta0: return "Delta0";
        case TriangleType::Delta1Plus: return "Delta1Plus";
        case TriangleType::Delta1Minus: return "Delta1Minus";
        case TriangleType::Delta3: return "Delta3";
    }
    return "Unknown";
}

TriangleType triangle_type(const SplitGraph& s, std::size_t a, std::size_t b, std::size_t c) {
    if (sigma(s, a, b) == 0 || sigma(s, b, c) == 0 || sigma(s, a, c) == 0)
        throw DomainError("triangle_type: the three vertices do not span a triangle of Phi");
    std::array<u64, 3> d{s.i_degree(a), s.i_degree(b), s.i_degree(c)};
    std::sort(d.begin(), d.end());
    if (d[0] == d[2]) return TriangleType::Delta3;
    if (d[0] < d[1] && d[1] < d[2]) return TriangleType::Delta0;
    return d[0] == d[1] ? TriangleType::Delta1Plus : TriangleType::Delta1Minus;
}

bool is_n_simple_type0_triangle(const SplitGraph& s, u64 n) {
    if (s.i_size() != 3) return false;
    if (sigma(s, 0, 1) != n || sigma(s, 1, 2) != n || sigma(s, 0, 2) != n || n == 0) return false;
    return triangle_type(s, 0, 1, 2) == TriangleType::Delta0;
}

namespace {

std::pair<std::size_t, std::size_t> clique_and_independence(const SplitGraph& s) {
    const std::size_t k = s.k_size();
    bool i_covers_k = false;
    for (std::size_t v = 0; v < s.i_size(); ++v) i_covers_k = i_covers_k || s.i_degree(v) == k;
    bool k_isolated_from_i = false;
    for (std::size_t label = 1; label <= k; ++label) k_isolated_from_i = k_isolated_from_i || s.k_degree(label) == k - 1;
    return {k + (i_covers_k ? 1 : 0), s.i_size() + (k_isolated_from_i ? 1 : 0)};
}

}  // namespace

bool is_balanced(const SplitGraph& s) {
    const auto [omega, alpha] = clique_and_independence(s);
    return omega == s.k_size() && alpha == s.i_size();
}

GraphStats graph_stats(const SplitGraph& s) {
    GraphStats st;
    std::tie(st.omega, st.alpha) = clique_and_independence(s);
    st.balanced = st.omega == s.k_size() && st.alpha == s.i_size();

    st.active.assign(s.vertex_count(), false);
    for_each_switch_quadruple(s, [&](const std::array<std::size_t, 4>& q) {
        if (switches_on_quadruple(s, q) > 0)
            for (std::size_t g : q) st.active[g] = true;
    });
    st.all_active = std::all_of(st.active.begin(), st.active.end(), [](bool b) { return b; });
    st.phi_connected = factor_graph(s).connected();
    st.indecomposable_active = st.all_active && st.phi_connected;
    return st;
}

std::vector<std::vector<std::size_t>> induced_cycles(const SplitGraph& s) {
    const FactorGraph phi = factor_graph(s);
    const std::size_t n = phi.size();
    auto edge = [&](std::size_t u, std::size_t v) { return phi.at(u, v) > 0; };
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> path;
    std::vector<bool> on_path(n, false);

    // Grow chordless paths from the smallest vertex; close when the last vertex
    // is adjacent to the start.
    std::function<void(std::size_t)> extend = [&](std::size_t start) {
        const std::size_t last = path.back();
        for (std::size_t w = start + 1; w < n; ++w) {
            if (on_path[w] || !edge(last, w)) continue;
            // w may touch only `last` and, when closing, `start`.
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path.size() && !chord; ++i) chord = edge(path[i], w);
            if (chord) continue;
            if (path.size() >= 2 && edge(start, w)) {
                if (path[1] < w) {
                    auto cycle = path;
                    cycle.push_back(w);
                    out.push_back(std::move(cycle));
                }
                continue;
            }
            path.push_back(w);
            on_path[w] = true;
            extend(start);
            on_path[w] = false;
            path.pop_back();
        }
    };
    for (std::size_t start = 0; start < n; ++start) {
        path = {start};
        on_path.assign(n, false);
        on_path[start] = true;
        extend(start);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::size_t>> n_simple_induced_cycles(const SplitGraph& s, u64 n) {
    std::vector<std::vector<std::size_t>> out;
    for (auto& cycle : induced_cycles(s)) {
        bool simple = true;
        for (std::size_t i = 0; i < cycle.size() && simple; ++i)
            simple = sigma(s, cycle[i], cycle[(i + 1) % cycle.size()]) == n;
        if (simple) out.push_back(std::move(cycle));
    }
    return out;
}

SplitGraph random_split_graph(std::mt19937_64& rng, std::size_t max_k, std::size_t max_i) {
    std::uniform_int_distribution<std::size_t> k_dist(0, max_k);
    std::uniform_int_distribution<std::size_t> i_dist(1, std::max<std::size_t>(1, max_i));
    std::uniform_int_distribution<int> density_dist(1, 3);
    const std::size_t k = k_dist(rng);
    const std::size_t ni = i_dist(rng);
    std::bernoulli_distribution edge(density_dist(rng) / 4.0);
    std::vector<std::vector<std::size_t>> nbhd(ni);
    for (auto& nv : nbhd)
        for (std::size_t label = 1; label <= k; ++label)
            if (edge(rng)) nv.push_back(label);
    return SplitGraph::with_default_labels(k, nbhd);
}

}  // namespace ndelta
