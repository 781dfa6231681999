#include "trichain/switch_moves.hpp"

#include <cassert>
#include <tuple>

namespace trichain {

namespace {

std::tuple<Vertex, Vertex, Vertex, Vertex, Vertex> as_tuple(const MakeMove& m) {
    return {m.y, m.x, m.v, m.w, m.z};
}

std::tuple<Vertex, Vertex, Vertex, Vertex, Vertex> as_tuple(const BreakMove& b) {
    return {b.v, b.x, b.w, b.y, b.z};
}

bool all_distinct(Vertex a, Vertex b, Vertex c, Vertex d, Vertex e) {
    return a != b && a != c && a != d && a != e && b != c && b != d && b != e &&
           c != d && c != e && d != e;
}

} // namespace

MakeMove mirrored(const MakeMove& m) { return {m.z, m.w, m.v, m.x, m.y}; }
BreakMove mirrored(const BreakMove& b) { return {b.v, b.w, b.x, b.z, b.y}; }

MakeMove normalized(const MakeMove& m) {
    const MakeMove mir = mirrored(m);
    return as_tuple(m) <= as_tuple(mir) ? m : mir;
}

BreakMove normalized(const BreakMove& b) {
    const BreakMove mir = mirrored(b);
    return as_tuple(b) <= as_tuple(mir) ? b : mir;
}

BreakMove reverse_of(const MakeMove& m) { return {m.v, m.x, m.w, m.y, m.z}; }
MakeMove reverse_of(const BreakMove& b) { return {b.y, b.x, b.v, b.w, b.z}; }

bool make_valid(const CubicGraph& g, const MakeMove& m) {
    const Vertex n = g.vertex_count();
    if (m.y >= n || m.x >= n || m.v >= n || m.w >= n || m.z >= n) return false;
    if (!all_distinct(m.y, m.x, m.v, m.w, m.z)) return false;
    return g.has_edge(m.y, m.x) && g.has_edge(m.x, m.v) && g.has_edge(m.v, m.w) &&
           g.has_edge(m.w, m.z) && !g.has_edge(m.x, m.w) && !g.has_edge(m.y, m.z);
}

bool break_valid(const CubicGraph& g, const BreakMove& b) {
    const Vertex n = g.vertex_count();
    if (b.v >= n || b.x >= n || b.w >= n || b.y >= n || b.z >= n) return false;
    if (b.y == b.v || b.y == b.x || b.y == b.w || b.z == b.v || b.z == b.x || b.z == b.w)
        return false;
    // y != z holds because yz must be an edge of a simple graph
    return g.has_edge(b.v, b.x) && g.has_edge(b.v, b.w) && g.has_edge(b.x, b.w) &&
           g.has_edge(b.y, b.z) && !g.has_edge(b.x, b.y) && !g.has_edge(b.w, b.z);
}

namespace detail {

// Triangles of g through edge (a, b); in a cubic graph at most 2.
inline int common_neighbors(const CubicGraph& g, Vertex a, Vertex b) {
    int count = 0;
    for (Vertex c : g.neighbors(a))
        if (c != b && g.has_edge(c, b)) ++count;
    return count;
}

int swap_delta_triangles(const CubicGraph& g, Edge rm1, Edge rm2, Edge ad1, Edge ad2) {
    const int destroyed = common_neighbors(g, rm1.first, rm1.second) +
                          common_neighbors(g, rm2.first, rm2.second);
    auto removed_partner = [&](Vertex u) {
        if (u == rm1.first) return rm1.second;
        if (u == rm1.second) return rm1.first;
        return u == rm2.first ? rm2.second : rm2.first;
    };
    int created = 0;
    for (Edge e : {ad1, ad2}) {
        const Vertex ra = removed_partner(e.first);
        const Vertex rb = removed_partner(e.second);
        for (Vertex c : g.neighbors(e.first))
            if (c != ra && c != e.second && c != rb && g.has_edge(c, e.second)) ++created;
    }
    return created - destroyed;
}

LocalDelta apply_edge_swap(CubicGraph& g, Edge rm1, Edge rm2, Edge ad1, Edge ad2) {
    // Per-vertex triangle-count events: each destroyed or created triangle
    // touches its three vertices.  In a cubic graph each edge lies in at
    // most two triangles, so at most 24 events occur.
    std::pair<Vertex, int> events[24];
    int event_count = 0;
    auto record_triangle = [&](Vertex a, Vertex b, Vertex c, int sign) {
        events[event_count++] = {a, sign};
        events[event_count++] = {b, sign};
        events[event_count++] = {c, sign};
    };
    for (Edge e : {rm1, rm2})
        for (Vertex c : g.neighbors(e.first))
            if (c != e.second && g.has_edge(c, e.second))
                record_triangle(e.first, e.second, c, -1);

    g.swap_edges(rm1, rm2, ad1, ad2);

    for (Edge e : {ad1, ad2})
        for (Vertex c : g.neighbors(e.first))
            if (c != e.second && g.has_edge(c, e.second))
                record_triangle(e.first, e.second, c, +1);

    // Aggregate per distinct vertex and translate triangle-count transitions
    // into motif-count changes: F counts tri=0 vertices, tetrahedron vertices
    // have tri=3, diamond-internal vertices tri=2, and the isolated/external
    // split follows from the identity n = F + 3I + 4D + 4T.
    int d_free = 0, d_tri3 = 0, d_tri2 = 0, net_total = 0;
    for (int i = 0; i < event_count; ++i) {
        const Vertex u = events[i].first;
        bool seen = false;
        for (int j = 0; j < i; ++j)
            if (events[j].first == u) { seen = true; break; }
        if (seen) continue;
        int net = 0;
        for (int j = i; j < event_count; ++j)
            if (events[j].first == u) net += events[j].second;
        if (net == 0) continue;
        net_total += net;
        const int post = g.triangles_at(u);
        const int pre = post - net;
        d_free += (post == 0) - (pre == 0);
        d_tri3 += (post == 3) - (pre == 3);
        d_tri2 += (post == 2) - (pre == 2);
    }
    assert(d_tri3 % 4 == 0 && d_tri2 % 2 == 0);
    LocalDelta delta;
    delta.free = d_free;
    delta.tet = d_tri3 / 4;
    delta.dia = d_tri2 / 2;
    assert((-d_free - 4 * delta.dia - 4 * delta.tet) % 3 == 0);
    delta.iso = (-d_free - 4 * delta.dia - 4 * delta.tet) / 3;
    delta.delta = delta.iso + 2 * delta.dia + 4 * delta.tet;
    assert(3 * delta.delta == net_total);
    delta.touched = {rm1.first, rm1.second, rm2.first, rm2.second};
    return delta;
}

} // namespace detail

LocalDelta apply_make(CubicGraph& g, const MakeMove& m) {
    if (!make_valid(g, m))
        throw Error(ErrorCode::InvalidMove, "invalid make move " + format_move(m));
    return detail::apply_edge_swap(g, {m.x, m.y}, {m.w, m.z}, {m.x, m.w}, {m.y, m.z});
}

LocalDelta apply_break(CubicGraph& g, const BreakMove& b) {
    if (!break_valid(g, b))
        throw Error(ErrorCode::InvalidMove, "invalid break move " + format_move(b));
    return detail::apply_edge_swap(g, {b.x, b.w}, {b.y, b.z}, {b.x, b.y}, {b.w, b.z});
}

int delta_triangles(const CubicGraph& g, const MakeMove& m) {
    if (!make_valid(g, m))
        throw Error(ErrorCode::InvalidMove, "invalid make move " + format_move(m));
    const int d = detail::swap_delta_triangles(g, {m.x, m.y}, {m.w, m.z}, {m.x, m.w}, {m.y, m.z});
    assert(d >= -4 && d <= 4);
    return d;
}

int delta_triangles(const CubicGraph& g, const BreakMove& b) {
    if (!break_valid(g, b))
        throw Error(ErrorCode::InvalidMove, "invalid break move " + format_move(b));
    const int d = detail::swap_delta_triangles(g, {b.x, b.w}, {b.y, b.z}, {b.x, b.y}, {b.w, b.z});
    assert(d >= -4 && d <= 4);
    return d;
}

MakeMove make_from_path_pair(Vertex v, const PathPair& pp) {
    return {pp.y, pp.x, v, pp.w, pp.z};
}

std::vector<PathPair> enumerate_qv(const CubicGraph& g, Vertex v) {
    static constexpr int kFirst[3] = {0, 0, 1};
    static constexpr int kSecond[3] = {1, 2, 2};
    std::vector<PathPair> result;
    const auto& nbrs = g.neighbors(v);
    for (int k = 0; k < 3; ++k) {
        const Vertex x = nbrs[kFirst[k]];
        const Vertex w = nbrs[kSecond[k]];
        if (g.has_edge(x, w)) continue;
        for (Vertex y : g.neighbors(x)) {
            if (y == v) continue;
            for (Vertex z : g.neighbors(w)) {
                if (z == v || z == y || g.has_edge(y, z)) continue;
                result.push_back({x, y, w, z});
            }
        }
    }
    return result;
}

std::optional<MakeMove> find_triangle_inserting_make(const CubicGraph& g, Vertex v) {
    const auto qv = enumerate_qv(g, v);
    if (qv.empty()) return std::nullopt; // exactly the K4-component case
    return make_from_path_pair(v, qv.front());
}

TripleSets::TripleSets(const CubicGraph& g) {
    const std::size_t total = std::size_t{3} * g.vertex_count();
    slot_.resize(total);
    for (std::uint32_t id = 0; id < total; ++id) place(g, id);
}

std::pair<Vertex, Vertex> TripleSets::pair_of(const CubicGraph& g, std::uint32_t triple_id) {
    static constexpr int kFirst[3] = {0, 0, 1};
    static constexpr int kSecond[3] = {1, 2, 2};
    const auto& nbrs = g.neighbors(triple_id / 3);
    const int k = triple_id % 3;
    return {nbrs[kFirst[k]], nbrs[kSecond[k]]};
}

void TripleSets::place(const CubicGraph& g, std::uint32_t triple_id) {
    const auto [a, b] = pair_of(g, triple_id);
    if (g.has_edge(a, b)) {
        slot_[triple_id] = {1, static_cast<std::uint32_t>(break_sites_.size())};
        break_sites_.push_back(triple_id);
    } else {
        slot_[triple_id] = {0, static_cast<std::uint32_t>(make_sites_.size())};
        make_sites_.push_back(triple_id);
    }
}

void TripleSets::reclassify(const CubicGraph& g, std::uint32_t triple_id) {
    const auto [a, b] = pair_of(g, triple_id);
    const std::uint8_t now_break = g.has_edge(a, b) ? 1 : 0;
    const auto [was_break, index] = slot_[triple_id];
    if (was_break == now_break) return;
    auto& from = was_break ? break_sites_ : make_sites_;
    auto& to = now_break ? break_sites_ : make_sites_;
    from[index] = from.back();
    slot_[from.back()].second = index;
    from.pop_back();
    slot_[triple_id] = {now_break, static_cast<std::uint32_t>(to.size())};
    to.push_back(triple_id);
}

std::uint32_t TripleSets::sample_make_site(Rng& rng) const {
    return make_sites_[rng.below(make_sites_.size())];
}

std::uint32_t TripleSets::sample_break_site(Rng& rng) const {
    return break_sites_[rng.below(break_sites_.size())];
}

void TripleSets::update(const CubicGraph& g_after, const LocalDelta& delta) {
    // Membership can change only for triples centered at a touched endpoint
    // (its neighbor list moved) or at one of its neighbors (a pair among the
    // center's neighbors gained or lost its edge).
    Vertex centers[16];
    int count = 0;
    auto add = [&](Vertex c) {
        for (int i = 0; i < count; ++i)
            if (centers[i] == c) return;
        centers[count++] = c;
    };
    for (Vertex endpoint : delta.touched) {
        add(endpoint);
        for (Vertex c : g_after.neighbors(endpoint)) add(c);
    }
    for (int i = 0; i < count; ++i)
        for (std::uint32_t k = 0; k < 3; ++k) reclassify(g_after, 3 * centers[i] + k);
}

bool TripleSets::consistent_with(const CubicGraph& g) const {
    if (slot_.size() != std::size_t{3} * g.vertex_count()) return false;
    if (make_sites_.size() + break_sites_.size() != slot_.size()) return false;
    for (std::uint32_t id = 0; id < slot_.size(); ++id) {
        const auto [a, b] = pair_of(g, id);
        const auto [flag, index] = slot_[id];
        if (flag != (g.has_edge(a, b) ? 1 : 0)) return false;
        const auto& list = flag ? break_sites_ : make_sites_;
        if (index >= list.size() || list[index] != id) return false;
    }
    return true;
}

std::vector<EnumeratedMove> enumerate_all_moves(const CubicGraph& g) {
    const Vertex n = g.vertex_count();
    const std::uint64_t key = edge_set_key(g);
    auto bit = [](Vertex a, Vertex b) {
        const Vertex hi = a > b ? a : b, lo = a > b ? b : a;
        return std::uint64_t{1} << (hi * (hi - 1) / 2 + lo);
    };
    std::vector<EnumeratedMove> moves;
    for (Vertex v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        // makes centered at v, kept only in normalized orientation
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const Vertex x = nbrs[i], w = nbrs[j];
                if (g.has_edge(x, w)) continue;
                for (Vertex y : g.neighbors(x)) {
                    if (y == v) continue;
                    for (Vertex z : g.neighbors(w)) {
                        if (z == v || z == y || g.has_edge(y, z)) continue;
                        const MakeMove m{y, x, v, w, z};
                        if (as_tuple(m) > as_tuple(mirrored(m))) continue;
                        const std::uint64_t result =
                            key ^ bit(m.x, m.y) ^ bit(m.w, m.z) ^ bit(m.x, m.w) ^ bit(m.y, m.z);
                        moves.push_back({true, m, {}, result});
                    }
                }
            }
        // breaks with apex v; x < w makes the orientation canonical
        static constexpr int kFirst[3] = {0, 0, 1};
        static constexpr int kSecond[3] = {1, 2, 2};
        for (int k = 0; k < 3; ++k) {
            const Vertex x = nbrs[kFirst[k]], w = nbrs[kSecond[k]];
            if (!g.has_edge(x, w)) continue;
            for (std::size_t e = 0; e < g.oriented_edge_count(); ++e) {
                const auto [y, z] = g.oriented_edge(e);
                const BreakMove b{v, x, w, y, z};
                if (!break_valid(g, b)) continue;
                const std::uint64_t result =
                    key ^ bit(b.x, b.w) ^ bit(b.y, b.z) ^ bit(b.x, b.y) ^ bit(b.w, b.z);
                moves.push_back({false, {}, b, result});
            }
        }
    }
    return moves;
}

std::string format_move(const MakeMove& m) {
    return "M " + std::to_string(m.y) + " " + std::to_string(m.x) + " " + std::to_string(m.v) +
           " " + std::to_string(m.w) + " " + std::to_string(m.z);
}

std::string format_move(const BreakMove& b) {
    return "B " + std::to_string(b.v) + " " + std::to_string(b.x) + " " + std::to_string(b.w) +
           " " + std::to_string(b.y) + " " + std::to_string(b.z);
}

} // namespace trichain
