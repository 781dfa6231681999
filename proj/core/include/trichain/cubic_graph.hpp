#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "trichain/error.hpp"

namespace trichain {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>; // stored endpoints need not be ordered

/// Labeled simple 3-regular graph on vertices 0..n-1, n even, n >= 4.
///
/// Neighbor lists hold exactly three distinct ids and are kept sorted
/// ascending, so edge tests and edge swaps are O(1).  Mutation goes through
/// swap_edges, which is the primitive every switch move reduces to.
class CubicGraph {
public:
    CubicGraph() = default;

    /// Validates and builds; throws Error with OddN / NotCubic / NotSimple.
    static CubicGraph from_edge_list(Vertex n, std::span<const Edge> edges);

    /// Adopts adjacency lists, sorts them, then validates.
    static CubicGraph from_adjacency(std::vector<std::array<Vertex, 3>> adjacency);

    Vertex vertex_count() const { return static_cast<Vertex>(adjacency_.size()); }
    std::size_t edge_count() const { return adjacency_.size() * 3 / 2; }
    std::size_t oriented_edge_count() const { return adjacency_.size() * 3; }

    const std::array<Vertex, 3>& neighbors(Vertex v) const { return adjacency_[v]; }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nbrs = adjacency_[u];
        return nbrs[0] == v || nbrs[1] == v || nbrs[2] == v;
    }

    /// Number of triangles containing v: 0..3, and 3 exactly when v lies in
    /// a K4 component.
    int triangles_at(Vertex v) const {
        const auto& nbrs = adjacency_[v];
        return static_cast<int>(has_edge(nbrs[0], nbrs[1])) +
               static_cast<int>(has_edge(nbrs[0], nbrs[2])) +
               static_cast<int>(has_edge(nbrs[1], nbrs[2]));
    }

    /// Oriented edge with index i in [0, 3n): (i/3, adjacency[i/3][i%3]).
    Edge oriented_edge(std::size_t i) const {
        const Vertex u = static_cast<Vertex>(i / 3);
        return {u, adjacency_[u][i % 3]};
    }

    /// Removes rm1, rm2 and inserts ad1, ad2.  The caller guarantees the
    /// result is simple cubic; a debug-mode validator re-checks the six
    /// touched vertices after the swap.
    void swap_edges(Edge rm1, Edge rm2, Edge ad1, Edge ad2);

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    /// Full invariant check: degree 3, symmetry, simplicity, sorted lists.
    void validate() const;

    bool operator==(const CubicGraph&) const = default;

private:
    void replace_neighbor(Vertex u, Vertex old_nbr, Vertex new_nbr);

    std::vector<std::array<Vertex, 3>> adjacency_;
};

/// Exact motif counts.  delta = triangles, iso = isolated triangles,
/// dia = diamonds, tet = tetrahedra (K4 components), free = vertices in no
/// triangle.  Identities: delta = iso + 2*dia + 4*tet and
/// n = free + 3*iso + 4*dia + 4*tet.
struct MotifCensus {
    std::int64_t delta = 0;
    std::int64_t iso = 0;
    std::int64_t dia = 0;
    std::int64_t tet = 0;
    std::int64_t free = 0;

    bool identities_hold(Vertex n) const {
        return delta == iso + 2 * dia + 4 * tet &&
               static_cast<std::int64_t>(n) == free + 3 * iso + 4 * dia + 4 * tet;
    }

    bool operator==(const MotifCensus&) const = default;
};

enum class VertexClass : std::uint8_t {
    Free,             // in no triangle
    IsolatedTriangle, // in one triangle sharing no edge with another
    DiamondExternal,  // degree 2 in its diamond
    DiamondInternal,  // on the diamond's diagonal edge
    Tetrahedron,      // in a K4 component
};

/// Local classification rules (equivalent to the pictorial definitions for
/// cubic graphs): Tetrahedron iff 3 triangles at v; DiamondInternal iff 2;
/// with one triangle, DiamondExternal iff that triangle's opposite edge lies
/// in a second triangle.
VertexClass classify_vertex(const CubicGraph& g, Vertex v);

MotifCensus full_census(const CubicGraph& g);
MotifCensus full_census(const CubicGraph& g, std::vector<VertexClass>& classes);

enum class NamedGraph { K4, K33, Prism, Q3 };

/// Fixed canonical labelings: K33 with parts {0,1,2} / {3,4,5}; prism with
/// triangles {0,1,2}, {3,4,5} and spokes i <-> i+3; Q3 with binary-coded
/// vertices adjacent at Hamming distance 1.
CubicGraph named_graph(NamedGraph kind);

/// n/4 disjoint K4 components on consecutive blocks; requires n % 4 == 0.
CubicGraph k4_packing(Vertex n);

/// As many disjoint prisms as possible (remainder filled with K4s), so the
/// graph exists for every even n >= 4.
CubicGraph prism_packing(Vertex n);

/// Maximum-triangle start for any even n: K4 packing when n % 4 == 0, else
/// (n-6)/4 K4s plus one prism.
CubicGraph triangle_rich_start(Vertex n);

/// Triangle-free cubic circulant C(n; {1, n/2}) for even n >= 6 (equals K33
/// at n = 6); throws BadN at n = 4 where no triangle-free cubic graph exists.
CubicGraph triangle_free_start(Vertex n);

/// Edge-list text format: one "u v" pair per line, 0-indexed.  The reader
/// takes the vertex count from the largest endpoint seen (rounded up to
/// even) and validates as from_edge_list does; blank lines are skipped.
void write_edge_list(std::ostream& out, const CubicGraph& g);
CubicGraph read_edge_list(std::istream& in);

/// Canonical edge-set key: bit v*(v-1)/2 + u set for each edge (u, v), u < v.
/// Fits in 64 bits for n <= 11; throws BadN above that.
std::uint64_t edge_set_key(const CubicGraph& g);

/// Inverse of edge_set_key for a known vertex count.
CubicGraph graph_from_key(Vertex n, std::uint64_t key);

} // namespace trichain
