// Independent brute-force oracles used to pin expected values.  Everything
// here recomputes from first principles (adjacency matrices, exhaustive
// loops) and deliberately shares no code with the library paths it checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <tuple>
#include <vector>

#include "trichain/cubic_graph.hpp"
#include "trichain/switch_moves.hpp"

namespace oracles {

using trichain::CubicGraph;
using trichain::Vertex;

inline std::vector<std::vector<bool>> adjacency_matrix(const CubicGraph& g) {
    const Vertex n = g.vertex_count();
    std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) m[v][u] = true;
    return m;
}

inline std::int64_t brute_triangle_count(const CubicGraph& g) {
    const auto m = adjacency_matrix(g);
    const Vertex n = g.vertex_count();
    std::int64_t count = 0;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (m[a][b] && m[a][c] && m[b][c]) ++count;
    return count;
}

/// Census from the triangle-sharing structure: group triangles into
/// edge-sharing components; size 1 is an isolated triangle, 2 a diamond and
/// 4 a tetrahedron (the only sizes possible in a cubic graph).
inline trichain::MotifCensus brute_census(const CubicGraph& g) {
    const auto m = adjacency_matrix(g);
    const Vertex n = g.vertex_count();
    std::vector<std::array<Vertex, 3>> triangles;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            for (Vertex c = b + 1; c < n; ++c)
                if (m[a][b] && m[a][c] && m[b][c]) triangles.push_back({a, b, c});

    auto share_edge = [](const std::array<Vertex, 3>& s, const std::array<Vertex, 3>& t) {
        int common = 0;
        for (Vertex u : s)
            for (Vertex v : t) common += u == v;
        return common >= 2;
    };
    std::vector<int> component(triangles.size(), -1);
    int components = 0;
    for (std::size_t i = 0; i < triangles.size(); ++i) {
        if (component[i] >= 0) continue;
        const int id = components++;
        std::vector<std::size_t> stack{i};
        component[i] = id;
        while (!stack.empty()) {
            const std::size_t s = stack.back();
            stack.pop_back();
            for (std::size_t t = 0; t < triangles.size(); ++t)
                if (component[t] < 0 && share_edge(triangles[s], triangles[t])) {
                    component[t] = id;
                    stack.push_back(t);
                }
        }
    }
    std::vector<int> size(components, 0);
    for (int c : component) ++size[c];

    trichain::MotifCensus census;
    census.delta = static_cast<std::int64_t>(triangles.size());
    for (int s : size) {
        if (s == 1) ++census.iso;
        else if (s == 2) ++census.dia;
        else ++census.tet; // size 4: the four triangles of a K4
    }
    std::set<Vertex> in_triangle;
    for (const auto& t : triangles) in_triangle.insert(t.begin(), t.end());
    census.free = static_cast<std::int64_t>(n - in_triangle.size());
    return census;
}

inline bool brute_make_valid(const CubicGraph& g, const trichain::MakeMove& mv) {
    const auto m = adjacency_matrix(g);
    const Vertex ids[5] = {mv.y, mv.x, mv.v, mv.w, mv.z};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (ids[i] == ids[j]) return false;
    return m[mv.y][mv.x] && m[mv.x][mv.v] && m[mv.v][mv.w] && m[mv.w][mv.z] && !m[mv.x][mv.w] &&
           !m[mv.y][mv.z];
}

inline bool brute_break_valid(const CubicGraph& g, const trichain::BreakMove& bv) {
    const auto m = adjacency_matrix(g);
    const Vertex ids[5] = {bv.v, bv.x, bv.w, bv.y, bv.z};
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (ids[i] == ids[j]) return false;
    return m[bv.v][bv.x] && m[bv.v][bv.w] && m[bv.x][bv.w] && m[bv.y][bv.z] && !m[bv.x][bv.y] &&
           !m[bv.w][bv.z];
}

using MoveTuple = std::tuple<Vertex, Vertex, Vertex, Vertex, Vertex>;

/// All normalized valid makes by quintuple loop over vertex tuples.
inline std::set<MoveTuple> brute_all_makes(const CubicGraph& g) {
    const Vertex n = g.vertex_count();
    std::set<MoveTuple> makes;
    for (Vertex y = 0; y < n; ++y)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex v = 0; v < n; ++v)
                for (Vertex w = 0; w < n; ++w)
                    for (Vertex z = 0; z < n; ++z) {
                        const trichain::MakeMove mv{y, x, v, w, z};
                        if (!brute_make_valid(g, mv)) continue;
                        makes.insert(std::min(MoveTuple{y, x, v, w, z}, MoveTuple{z, w, v, x, y}));
                    }
    return makes;
}

inline std::set<MoveTuple> brute_all_breaks(const CubicGraph& g) {
    const Vertex n = g.vertex_count();
    std::set<MoveTuple> breaks;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex x = 0; x < n; ++x)
            for (Vertex w = 0; w < n; ++w)
                for (Vertex y = 0; y < n; ++y)
                    for (Vertex z = 0; z < n; ++z) {
                        const trichain::BreakMove bv{v, x, w, y, z};
                        if (!brute_break_valid(g, bv)) continue;
                        breaks.insert(std::min(MoveTuple{v, x, w, y, z}, MoveTuple{v, w, x, z, y}));
                    }
    return breaks;
}

/// Q_v by quadruple loop over all vertices, straight from the definition.
inline std::set<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> brute_qv(
    const CubicGraph& g, Vertex v) {
    const auto m = adjacency_matrix(g);
    const Vertex n = g.vertex_count();
    std::set<std::pair<std::pair<Vertex, Vertex>, std::pair<Vertex, Vertex>>> pairs;
    for (Vertex x = 0; x < n; ++x)
        for (Vertex w = 0; w < n; ++w)
            for (Vertex y = 0; y < n; ++y)
                for (Vertex z = 0; z < n; ++z) {
                    if (!m[v][x] || !m[v][w] || x == w || m[w][x]) continue;
                    if (!m[x][y] || y == v || !m[w][z] || z == v) continue;
                    if (y == z || m[y][z]) continue;
                    std::pair<Vertex, Vertex> p1{x, y}, p2{w, z};
                    pairs.insert({std::min(p1, p2), std::max(p1, p2)});
                }
    return pairs;
}

/// Number of perfect matchings of the 3n configuration points that collapse
/// to simple graphs, counted by a canonical-order recursion with point
/// multiplicities.  Equals |G_n| * 6^n.
inline std::uint64_t simple_matching_count(Vertex n) {
    std::vector<int> stubs(n, 3);
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::uint64_t total = 0;

    struct Rec {
        std::vector<int>& stubs;
        std::vector<std::vector<bool>>& adj;
        std::uint64_t& total;
        Vertex n;

        void run(std::uint64_t weight) {
            Vertex u = n;
            for (Vertex v = 0; v < n; ++v)
                if (stubs[v] > 0) { u = v; break; }
            if (u == n) {
                total += weight;
                return;
            }
            --stubs[u];
            for (Vertex w = 0; w < n; ++w) {
                if (w == u || stubs[w] == 0 || adj[u][w]) continue;
                --stubs[w];
                adj[u][w] = adj[w][u] = true;
                run(weight * static_cast<std::uint64_t>(stubs[w] + 1));
                adj[u][w] = adj[w][u] = false;
                ++stubs[w];
            }
            ++stubs[u];
        }
    };
    Rec rec{stubs, adj, total, n};
    rec.run(1);
    return total;
}

inline std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t result = 1;
    while (exp--) result *= base;
    return result;
}

} // namespace oracles
