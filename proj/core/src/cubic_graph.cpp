#include "trichain/cubic_graph.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace trichain {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::OddN: return "OddN";
        case ErrorCode::BadN: return "BadN";
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::InvalidMove: return "InvalidMove";
        case ErrorCode::AllZero: return "AllZero";
        case ErrorCode::NotStochastic: return "NotStochastic";
        case ErrorCode::BadConfig: return "BadConfig";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

CubicGraph CubicGraph::from_edge_list(Vertex n, std::span<const Edge> edges) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::OddN, "vertex count must be even and at least 4, got " +
                                         std::to_string(n));
    std::vector<std::array<Vertex, 3>> adjacency(n);
    std::vector<int> degree(n, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n || v >= n)
            throw Error(ErrorCode::NotCubic, "edge endpoint out of range: " +
                                                 std::to_string(u) + " " + std::to_string(v));
        if (u == v)
            throw Error(ErrorCode::NotSimple, "self-loop at vertex " + std::to_string(u));
        for (int i = 0; i < degree[u]; ++i)
            if (adjacency[u][i] == v)
                throw Error(ErrorCode::NotSimple, "repeated edge " + std::to_string(u) + " " +
                                                      std::to_string(v));
        if (degree[u] >= 3 || degree[v] >= 3)
            throw Error(ErrorCode::NotCubic,
                        "degree exceeds 3 at vertex " +
                            std::to_string(degree[u] >= 3 ? u : v));
        adjacency[u][degree[u]++] = v;
        adjacency[v][degree[v]++] = u;
    }
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] != 3)
            throw Error(ErrorCode::NotCubic,
                        "vertex " + std::to_string(v) + " has degree " + std::to_string(degree[v]));
    return from_adjacency(std::move(adjacency));
}

CubicGraph CubicGraph::from_adjacency(std::vector<std::array<Vertex, 3>> adjacency) {
    CubicGraph g;
    g.adjacency_ = std::move(adjacency);
    for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
    g.validate();
    return g;
}

void CubicGraph::validate() const {
    const Vertex n = vertex_count();
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::OddN, "vertex count must be even and at least 4");
    for (Vertex v = 0; v < n; ++v) {
        const auto& nbrs = adjacency_[v];
        if (!(nbrs[0] < nbrs[1] && nbrs[1] < nbrs[2]))
            throw Error(ErrorCode::NotSimple,
                        "neighbor list of " + std::to_string(v) + " not strictly ascending");
        for (Vertex u : nbrs) {
            if (u >= n)
                throw Error(ErrorCode::NotCubic, "neighbor out of range at " + std::to_string(v));
            if (u == v)
                throw Error(ErrorCode::NotSimple, "self-loop at " + std::to_string(v));
            if (!has_edge(u, v))
                throw Error(ErrorCode::NotCubic,
                            "asymmetric adjacency between " + std::to_string(v) + " and " +
                                std::to_string(u));
        }
    }
}

std::vector<Edge> CubicGraph::edges() const {
    std::vector<Edge> result;
    result.reserve(edge_count());
    for (Vertex v = 0; v < vertex_count(); ++v)
        for (Vertex u : adjacency_[v])
            if (v < u) result.emplace_back(v, u);
    return result;
}

void CubicGraph::replace_neighbor(Vertex u, Vertex old_nbr, Vertex new_nbr) {
    auto& nbrs = adjacency_[u];
    for (auto& entry : nbrs) {
        if (entry == old_nbr) {
            entry = new_nbr;
            // restore sorted order with at most two swaps
            if (nbrs[0] > nbrs[1]) std::swap(nbrs[0], nbrs[1]);
            if (nbrs[1] > nbrs[2]) std::swap(nbrs[1], nbrs[2]);
            if (nbrs[0] > nbrs[1]) std::swap(nbrs[0], nbrs[1]);
            return;
        }
    }
    assert(false && "replace_neighbor: edge not present");
}

void CubicGraph::swap_edges(Edge rm1, Edge rm2, Edge ad1, Edge ad2) {
    // Endpoint multisets of removed and added pairs must agree; each of the
    // four vertices swaps exactly one neighbor.
    replace_neighbor(rm1.first, rm1.second,
                     ad1.first == rm1.first    ? ad1.second
                     : ad1.second == rm1.first ? ad1.first
                     : ad2.first == rm1.first  ? ad2.second
                                               : ad2.first);
    replace_neighbor(rm1.second, rm1.first,
                     ad1.first == rm1.second    ? ad1.second
                     : ad1.second == rm1.second ? ad1.first
                     : ad2.first == rm1.second  ? ad2.second
                                                : ad2.first);
    replace_neighbor(rm2.first, rm2.second,
                     ad1.first == rm2.first    ? ad1.second
                     : ad1.second == rm2.first ? ad1.first
                     : ad2.first == rm2.first  ? ad2.second
                                               : ad2.first);
    replace_neighbor(rm2.second, rm2.first,
                     ad1.first == rm2.second    ? ad1.second
                     : ad1.second == rm2.second ? ad1.first
                     : ad2.first == rm2.second  ? ad2.second
                                                : ad2.first);
#ifndef NDEBUG
    for (Vertex v : {rm1.first, rm1.second, rm2.first, rm2.second}) {
        const auto& nbrs = adjacency_[v];
        assert(nbrs[0] < nbrs[1] && nbrs[1] < nbrs[2]);
        for (Vertex u : nbrs) assert(u != v && has_edge(u, v));
    }
#endif
}

VertexClass classify_vertex(const CubicGraph& g, Vertex v) {
    const int tri = g.triangles_at(v);
    if (tri == 0) return VertexClass::Free;
    if (tri == 3) return VertexClass::Tetrahedron;
    if (tri == 2) return VertexClass::DiamondInternal;
    // One triangle {v, a, b}.  It belongs to a diamond iff edge ab lies in a
    // second triangle, i.e. a and b have a common neighbor besides v (the
    // edges va, vb cannot host one, or v would have two triangles).
    const auto& nbrs = g.neighbors(v);
    Vertex a = 0, b = 0;
    if (g.has_edge(nbrs[0], nbrs[1])) { a = nbrs[0]; b = nbrs[1]; }
    else if (g.has_edge(nbrs[0], nbrs[2])) { a = nbrs[0]; b = nbrs[2]; }
    else { a = nbrs[1]; b = nbrs[2]; }
    for (Vertex c : g.neighbors(a))
        if (c != v && c != b && g.has_edge(c, b)) return VertexClass::DiamondExternal;
    return VertexClass::IsolatedTriangle;
}

MotifCensus full_census(const CubicGraph& g, std::vector<VertexClass>& classes) {
    const Vertex n = g.vertex_count();
    classes.resize(n);
    std::int64_t count_free = 0, count_iso = 0, count_dint = 0, count_dext = 0, count_tet = 0;
    for (Vertex v = 0; v < n; ++v) {
        const VertexClass c = classify_vertex(g, v);
        classes[v] = c;
        switch (c) {
            case VertexClass::Free: ++count_free; break;
            case VertexClass::IsolatedTriangle: ++count_iso; break;
            case VertexClass::DiamondExternal: ++count_dext; break;
            case VertexClass::DiamondInternal: ++count_dint; break;
            case VertexClass::Tetrahedron: ++count_tet; break;
        }
    }
    assert(count_iso % 3 == 0 && count_dint % 2 == 0 && count_tet % 4 == 0);
    assert(count_dint == count_dext);
    MotifCensus census;
    census.free = count_free;
    census.iso = count_iso / 3;
    census.dia = count_dint / 2;
    census.tet = count_tet / 4;
    census.delta = census.iso + 2 * census.dia + 4 * census.tet;
    return census;
}

MotifCensus full_census(const CubicGraph& g) {
    std::vector<VertexClass> classes;
    return full_census(g, classes);
}

namespace {

CubicGraph from_blocks(Vertex n, const std::vector<std::vector<Edge>>& block_edges,
                       const std::vector<Vertex>& block_sizes) {
    std::vector<Edge> edges;
    Vertex base = 0;
    for (std::size_t i = 0; i < block_edges.size(); ++i) {
        for (auto [u, v] : block_edges[i]) edges.emplace_back(base + u, base + v);
        base += block_sizes[i];
    }
    return CubicGraph::from_edge_list(n, edges);
}

const std::vector<Edge>& k4_edges() {
    static const std::vector<Edge> e = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    return e;
}

const std::vector<Edge>& prism_edges() {
    static const std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5},
                                        {3, 5}, {0, 3}, {1, 4}, {2, 5}};
    return e;
}

} // namespace

CubicGraph named_graph(NamedGraph kind) {
    switch (kind) {
        case NamedGraph::K4:
            return CubicGraph::from_edge_list(4, k4_edges());
        case NamedGraph::K33: {
            std::vector<Edge> edges;
            for (Vertex u = 0; u < 3; ++u)
                for (Vertex v = 3; v < 6; ++v) edges.emplace_back(u, v);
            return CubicGraph::from_edge_list(6, edges);
        }
        case NamedGraph::Prism:
            return CubicGraph::from_edge_list(6, prism_edges());
        case NamedGraph::Q3: {
            std::vector<Edge> edges;
            for (Vertex v = 0; v < 8; ++v)
                for (int bit = 0; bit < 3; ++bit) {
                    const Vertex u = v ^ (1u << bit);
                    if (v < u) edges.emplace_back(v, u);
                }
            return CubicGraph::from_edge_list(8, edges);
        }
    }
    throw Error(ErrorCode::BadN, "unknown named graph");
}

CubicGraph k4_packing(Vertex n) {
    if (n < 4 || n % 4 != 0)
        throw Error(ErrorCode::BadN, "K4 packing needs n divisible by 4, got " + std::to_string(n));
    std::vector<std::vector<Edge>> blocks(n / 4, k4_edges());
    std::vector<Vertex> sizes(n / 4, 4);
    return from_blocks(n, blocks, sizes);
}

CubicGraph prism_packing(Vertex n) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::BadN, "prism packing needs even n >= 4, got " + std::to_string(n));
    // Largest prism count whose remainder is coverable by K4s.
    Vertex prisms = n / 6;
    while ((n - 6 * prisms) % 4 != 0) --prisms;
    const Vertex k4s = (n - 6 * prisms) / 4;
    std::vector<std::vector<Edge>> blocks;
    std::vector<Vertex> sizes;
    for (Vertex i = 0; i < prisms; ++i) { blocks.push_back(prism_edges()); sizes.push_back(6); }
    for (Vertex i = 0; i < k4s; ++i) { blocks.push_back(k4_edges()); sizes.push_back(4); }
    return from_blocks(n, blocks, sizes);
}

CubicGraph triangle_rich_start(Vertex n) {
    if (n % 4 == 0) return k4_packing(n);
    if (n % 2 != 0 || n < 6)
        throw Error(ErrorCode::BadN, "need even n >= 4, got " + std::to_string(n));
    // n = 2 mod 4: one prism plus (n-6)/4 tetrahedra, the maximum-triangle
    // packing for this residue.
    std::vector<std::vector<Edge>> blocks{prism_edges()};
    std::vector<Vertex> sizes{6};
    for (Vertex i = 0; i < (n - 6) / 4; ++i) { blocks.push_back(k4_edges()); sizes.push_back(4); }
    return from_blocks(n, blocks, sizes);
}

CubicGraph triangle_free_start(Vertex n) {
    if (n < 6 || n % 2 != 0)
        throw Error(ErrorCode::BadN,
                    "no triangle-free cubic graph below n = 6, got " + std::to_string(n));
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        edges.emplace_back(v, (v + 1) % n);
        if (v < n / 2) edges.emplace_back(v, v + n / 2);
    }
    return CubicGraph::from_edge_list(n, edges);
}

void write_edge_list(std::ostream& out, const CubicGraph& g) {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

CubicGraph read_edge_list(std::istream& in) {
    std::vector<Edge> edges;
    Vertex max_vertex = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        Vertex u, v;
        if (!(row >> u >> v))
            throw Error(ErrorCode::Io, "bad edge-list line " + std::to_string(line_no));
        edges.emplace_back(u, v);
        max_vertex = std::max({max_vertex, u, v});
    }
    const Vertex n = (max_vertex + 2) & ~Vertex{1}; // round up to even
    return CubicGraph::from_edge_list(n, edges);
}

std::uint64_t edge_set_key(const CubicGraph& g) {
    const Vertex n = g.vertex_count();
    if (n > 11)
        throw Error(ErrorCode::BadN, "edge-set key supports n <= 11, got " + std::to_string(n));
    std::uint64_t key = 0;
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v))
            if (u > v) key |= std::uint64_t{1} << (u * (u - 1) / 2 + v);
    return key;
}

CubicGraph graph_from_key(Vertex n, std::uint64_t key) {
    std::vector<Edge> edges;
    edges.reserve(3 * n / 2);
    for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u)
            if (key >> (v * (v - 1) / 2 + u) & 1) edges.emplace_back(u, v);
    return CubicGraph::from_edge_list(n, edges);
}

} // namespace trichain
