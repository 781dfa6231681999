#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trichain/cubic_graph.hpp"
#include "trichain/rng.hpp"

namespace trichain {

/// make(yxvwz): replace the 4-path y-x-v-w-z by the triangle vxw plus the
/// disjoint edge yz.  v is the central vertex.  A move and its mirror
/// (z,w,v,x,y) are the same move.
struct MakeMove {
    Vertex y, x, v, w, z;
    bool operator==(const MakeMove&) const = default;
};

/// break(vxw, yz): replace the triangle vxw (apex v kept fixed) and the
/// disjoint oriented edge (y, z) by the 4-path y-x-v-w-z.  Mirror is
/// (v,w,x,z,y).
struct BreakMove {
    Vertex v, x, w, y, z;
    bool operator==(const BreakMove&) const = default;
};

MakeMove mirrored(const MakeMove& m);
BreakMove mirrored(const BreakMove& b);

/// Lexicographically smaller of the move and its mirror.
MakeMove normalized(const MakeMove& m);
BreakMove normalized(const BreakMove& b);

/// The break that undoes a make, and vice versa.
BreakMove reverse_of(const MakeMove& m);
MakeMove reverse_of(const BreakMove& b);

bool make_valid(const CubicGraph& g, const MakeMove& m);
bool break_valid(const CubicGraph& g, const BreakMove& b);

/// Change in the motif census caused by one applied move, plus the four
/// endpoints of the swapped edges (the vertices whose neighborhoods moved).
struct LocalDelta {
    int delta = 0;
    int iso = 0;
    int dia = 0;
    int tet = 0;
    int free = 0;
    std::array<Vertex, 4> touched{};

    void accumulate_into(MotifCensus& census) const {
        census.delta += delta;
        census.iso += iso;
        census.dia += dia;
        census.tet += tet;
        census.free += free;
    }
};

/// Applies the move (throws InvalidMove if the validity predicate fails) and
/// returns the census change, computed from the constant-size neighborhood
/// of the touched edges.
LocalDelta apply_make(CubicGraph& g, const MakeMove& m);
LocalDelta apply_break(CubicGraph& g, const BreakMove& b);

/// Delta(G') - Delta(G) for the move, without mutating g.  Range [-4, 4].
int delta_triangles(const CubicGraph& g, const MakeMove& m);
int delta_triangles(const CubicGraph& g, const BreakMove& b);

/// Unordered pair of edge-disjoint 2-paths {v-x-y, v-w-z} whose induced make
/// move is valid; canonical representative has x < w.
struct PathPair {
    Vertex x, y, w, z;
    bool operator==(const PathPair&) const = default;
};

MakeMove make_from_path_pair(Vertex v, const PathPair& pp);

/// Q_v: every path pair at v defining a valid make.  |Q_v| <= 12, and Q_v is
/// nonempty whenever v has at most 2 triangles.
std::vector<PathPair> enumerate_qv(const CubicGraph& g, Vertex v);

/// A valid make whose application creates a triangle at v, or nullopt when v
/// lies in a K4 component (the only case with no such move).
std::optional<MakeMove> find_triangle_inserting_make(const CubicGraph& g, Vertex v);

/// Maintained partition of the 3n triples (v; {w,x}) into make sites M
/// (wx absent) and break sites B (wx present).  Triple id 3v+k refers to the
/// k-th unordered pair of v's sorted neighbor list, so ids are dense and the
/// structure supports O(1) uniform sampling and O(1) post-move updates.
class TripleSets {
public:
    TripleSets() = default;
    explicit TripleSets(const CubicGraph& g);

    std::size_t total() const { return slot_.size(); }       // |S| = 3n
    std::size_t make_count() const { return make_sites_.size(); }
    std::size_t break_count() const { return break_sites_.size(); }

    std::uint32_t sample_make_site(Rng& rng) const;
    std::uint32_t sample_break_site(Rng& rng) const;

    /// Central vertex and unordered neighbor pair of a triple id, read from
    /// the current graph.
    static Vertex center(std::uint32_t triple_id) { return triple_id / 3; }
    static std::pair<Vertex, Vertex> pair_of(const CubicGraph& g, std::uint32_t triple_id);

    /// Re-derives membership for every triple whose center or pair status a
    /// move can have changed: the touched endpoints and their neighbors.
    void update(const CubicGraph& g_after, const LocalDelta& delta);

    bool consistent_with(const CubicGraph& g) const;

private:
    void place(const CubicGraph& g, std::uint32_t triple_id);
    void reclassify(const CubicGraph& g, std::uint32_t triple_id);

    std::vector<std::uint32_t> make_sites_;
    std::vector<std::uint32_t> break_sites_;
    // per triple id: list flag (1 = break) and index within that list
    std::vector<std::pair<std::uint8_t, std::uint32_t>> slot_;
};

/// One normalized valid move on g together with the edge-set key of the
/// resulting graph (n <= 11).
struct EnumeratedMove {
    bool is_make;
    MakeMove make;
    BreakMove brk;
    std::uint64_t result_key;
};

/// Every valid move, one entry per normalized move.  Adjacency of G*_n.
std::vector<EnumeratedMove> enumerate_all_moves(const CubicGraph& g);

/// Text form for trace/replay logs: "M y x v w z" / "B v x w y z".
std::string format_move(const MakeMove& m);
std::string format_move(const BreakMove& b);

namespace detail {

/// Shared edge-swap core (also drives the Metropolis proposal step): removes
/// rm1, rm2, inserts ad1, ad2 and derives the census change from the
/// triangles destroyed and created around the four endpoints.
LocalDelta apply_edge_swap(CubicGraph& g, Edge rm1, Edge rm2, Edge ad1, Edge ad2);

/// Triangle-count change of the same swap without mutating g.
int swap_delta_triangles(const CubicGraph& g, Edge rm1, Edge rm2, Edge ad1, Edge ad2);

} // namespace detail

} // namespace trichain
