#pragma once

// Brute-force reference implementations, written without the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline std::vector<u64> dstar(u64 n) {
    std::set<u64> s;
    for (u64 a = 1; a * a <= n; ++a)
        if (n % a == 0) s.insert(n / a - a);
    return {s.begin(), s.end()};
}

inline std::vector<u64> dplus(u64 n) {
    const auto d = dstar(n);
    std::set<u64> s;
    for (u64 p : d)
        for (u64 q : d)
            if (p > 0 && q > 0) s.insert(p + q);
    return {s.begin(), s.end()};
}

inline bool has_delta(u64 n) {
    const auto d = dstar(n);
    const std::set<u64> ds(d.begin(), d.end());
    for (u64 p : d)
        for (u64 q : d)
            if (p > 0 && q > 0 && ds.count(p + q)) return true;
    return false;
}

// (x, y, z) ascending, from the defining difference equation.
inline std::vector<std::tuple<u64, u64, u64>> triples(u64 n) {
    std::vector<u64> small;
    for (u64 d = 2; d * d < n; ++d)
        if (n % d == 0) small.push_back(d);
    std::vector<std::tuple<u64, u64, u64>> out;
    for (u64 x : small)
        for (u64 y : small)
            for (u64 z : small)
                if (x < y && y <= z && n / x - x == (n / y - y) + (n / z - z)) out.emplace_back(x, y, z);
    return out;
}

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline u64 tau(u64 n) {
    u64 t = 0;
    for (u64 d = 1; d * d <= n; ++d)
        if (n % d == 0) t += (d * d == n) ? 1 : 2;
    return t;
}

inline bool is_square(u64 n) {
    u64 r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r * r == n;
}

inline bool is_primitive(u64 n) {
    if (!has_delta(n)) return false;
    for (u64 a = 2; a * a <= n; ++a)
        if (n % (a * a) == 0 && n / (a * a) >= 2 && has_delta(n / (a * a))) return false;
    return true;
}

// A split graph as a plain adjacency matrix: vertices 0..k-1 form the
// clique, k.. are the independent vertices.
struct Graph {
    std::size_t k = 0;
    std::vector<std::vector<bool>> adj;

    Graph(std::size_t k_size, const std::vector<std::vector<std::size_t>>& nbhd) : k(k_size) {
        const std::size_t v = k_size + nbhd.size();
        adj.assign(v, std::vector<bool>(v, false));
        for (std::size_t p = 0; p < k_size; ++p)
            for (std::size_t q = 0; q < k_size; ++q) adj[p][q] = p != q;
        for (std::size_t i = 0; i < nbhd.size(); ++i)
            for (std::size_t label : nbhd[i]) adj[k_size + i][label - 1] = adj[label - 1][k_size + i] = true;
    }
    std::size_t size() const { return adj.size(); }
};

using Edge = std::pair<std::size_t, std::size_t>;
using Switch = std::pair<std::set<Edge>, std::set<Edge>>;  // removed, added

inline Edge edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

// Every 2-switch: remove ab, cd and add ac, bd, on four distinct vertices.
inline std::set<Switch> all_switches(const Graph& g) {
    std::set<Switch> out;
    const std::size_t v = g.size();
    for (std::size_t a = 0; a < v; ++a)
        for (std::size_t b = 0; b < v; ++b)
            for (std::size_t c = 0; c < v; ++c)
                for (std::size_t d = 0; d < v; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (!g.adj[a][b] || !g.adj[c][d] || g.adj[a][c] || g.adj[b][d]) continue;
                    out.insert({{edge(a, b), edge(c, d)}, {edge(a, c), edge(b, d)}});
                }
    return out;
}

inline std::set<std::size_t> touched(const Switch& s) {
    std::set<std::size_t> t;
    for (const auto& e : s.first) t.insert({e.first, e.second});
    return t;
}

// Switches whose vertex set contains both global ids u and v.
inline u64 pair_count(const std::set<Switch>& sw, std::size_t u, std::size_t v) {
    u64 c = 0;
    for (const auto& s : sw) {
        const auto t = touched(s);
        c += t.count(u) && t.count(v);
    }
    return c;
}

inline std::vector<bool> active(const Graph& g, const std::set<Switch>& sw) {
    std::vector<bool> out(g.size(), false);
    for (const auto& s : sw)
        for (std::size_t x : touched(s)) out[x] = true;
    return out;
}

}  // namespace oracle
