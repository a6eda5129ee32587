#pragma once

// Split graphs (K, I), their 2-switches and the factor multigraph on I.
//
// K is labelled 1..k_size and is implicitly a clique; I is implicitly
// independent. Each I-vertex stores its neighbourhood in K as a bitset.
// I-vertices are addressed by index 0..i_size()-1 everywhere below.

#include <array>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ndelta/arith.hpp"

namespace ndelta {

class SplitGraph {
public:
    SplitGraph() = default;

    /// Neighbourhoods hold K labels in 1..k_size. Throws DomainError on an
    /// out-of-range label, a repeated label within a neighbourhood, a size
    /// mismatch or a duplicate I-label.
    SplitGraph(std::size_t k_size, std::vector<std::string> labels,
               const std::vector<std::vector<std::size_t>>& neighborhoods);

    /// Labels v1, v2, ...
    static SplitGraph with_default_labels(std::size_t k_size,
                                          const std::vector<std::vector<std::size_t>>& neighborhoods);

    std::size_t k_size() const { return k_size_; }
    std::size_t i_size() const { return labels_.size(); }
    std::size_t vertex_count() const { return k_size_ + labels_.size(); }
    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::span<const std::uint64_t> bits(std::size_t v) const;
    /// Ascending K labels of N_v.
    std::vector<std::size_t> neighborhood(std::size_t v) const;
    bool i_adjacent(std::size_t v, std::size_t k_label) const;

    /// d_v = |N_v|.
    u64 i_degree(std::size_t v) const;
    /// d_k = (|K| - 1) + #{v in I : k in N_v}.
    u64 k_degree(std::size_t k_label) const;
    /// |N_u cap N_v|.
    u64 eta(std::size_t u, std::size_t v) const;

    /// Adjacency over global ids: 0..k_size-1 are K labels 1..k_size, then I.
    bool adjacent(std::size_t p, std::size_t q) const;
    bool is_i_vertex(std::size_t global) const { return global >= k_size_; }

private:
    std::size_t k_size_ = 0;
    std::size_t words_ = 0;
    std::vector<std::string> labels_;
    std::vector<std::uint64_t> bits_;  // i_size * words_, row-major
};

/// sigma_uv = (d_u - eta_uv)(d_v - eta_uv). Throws DomainError unless u != v
/// are valid I-indices.
u64 sigma(const SplitGraph& s, std::size_t u, std::size_t v);

/// Number of distinct 2-switches whose four vertices include u and v, counted
/// by enumerating every 4-vertex configuration.
u64 sigma_oracle(const SplitGraph& s, std::size_t u, std::size_t v);

/// deg(S): number of distinct 2-switches on S, by enumeration.
u64 two_switch_count_oracle(const SplitGraph& s);

/// Distinct 2-switches supported by the four given global vertices.
u64 switches_on_quadruple(const SplitGraph& s, const std::array<std::size_t, 4>& q);

struct FactorGraph {
    std::vector<std::string> labels;
    std::vector<u64> multiplicity;  // i_size x i_size, symmetric, zero diagonal

    std::size_t size() const { return labels.size(); }
    u64 at(std::size_t u, std::size_t v) const { return multiplicity[u * labels.size() + v]; }
    /// Sum of multiplicities over unordered pairs.
    u64 weighted_edge_count() const;
    /// Connectivity of the underlying simple graph.
    bool connected() const;
};

FactorGraph factor_graph(const SplitGraph& s);

/// Arcs (u, v) with d_u <= d_v and sigma_uv > 0, ascending.
std::vector<std::pair<std::size_t, std::size_t>> flow_orientation(const SplitGraph& s);

enum class TriangleType { Delta0, Delta1Plus, Delta1Minus, Delta3 };

std::string_view triangle_type_name(TriangleType t);

/// Throws DomainError if some pair among a, b, c has sigma = 0.
TriangleType triangle_type(const SplitGraph& s, std::size_t a, std::size_t b, std::size_t c);

bool is_n_simple_type0_triangle(const SplitGraph& s, u64 n);

struct GraphStats {
    std::size_t omega = 0;
    std::size_t alpha = 0;
    bool balanced = false;
    std::vector<bool> active;  // global ids
    bool all_active = false;
    bool phi_connected = false;
    bool indecomposable_active = false;
};

/// |K| = omega(S) and |I| = alpha(S); cheap, no switch enumeration.
bool is_balanced(const SplitGraph& s);

GraphStats graph_stats(const SplitGraph& s);

/// Induced cycles (length >= 3) of the simple graph underlying Phi(S), each
/// as I-indices starting at its smallest vertex, second entry < last entry.
std::vector<std::vector<std::size_t>> induced_cycles(const SplitGraph& s);

/// Induced cycles all of whose edges have multiplicity n.
std::vector<std::vector<std::size_t>> n_simple_induced_cycles(const SplitGraph& s, u64 n);

/// Uniform random split graph with 0 <= |K| <= max_k and 1 <= |I| <= max_i;
/// each graph draws an edge density from {1/4, 1/2, 3/4}.
SplitGraph random_split_graph(std::mt19937_64& rng, std::size_t max_k, std::size_t max_i);

}  // namespace ndelta
