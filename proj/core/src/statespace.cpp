#include "trichain/statespace.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <thread>

namespace trichain {

std::uint32_t StateSpace::index_of(std::uint64_t key) const {
    const auto it = std::lower_bound(keys.begin(), keys.end(), key);
    if (it == keys.end() || *it != key)
        throw Error(ErrorCode::BadN, "graph is not a state of this space");
    return static_cast<std::uint32_t>(it - keys.begin());
}

bool StateSpace::contains(std::uint64_t key) const {
    return std::binary_search(keys.begin(), keys.end(), key);
}

namespace {

struct Enumerator {
    Vertex n;
    std::vector<int> degree;
    std::vector<std::uint16_t> nbr_mask; // adjacency bitmask per vertex
    std::uint64_t key = 0;
    std::vector<std::uint64_t>* out;

    void add_edge(Vertex u, Vertex v) {
        ++degree[u];
        ++degree[v];
        nbr_mask[u] |= std::uint16_t(1) << v;
        nbr_mask[v] |= std::uint16_t(1) << u;
        key |= std::uint64_t{1} << (v * (v - 1) / 2 + u); // u < v
    }

    void remove_edge(Vertex u, Vertex v) {
        --degree[u];
        --degree[v];
        nbr_mask[u] &= ~(std::uint16_t(1) << v);
        nbr_mask[v] &= ~(std::uint16_t(1) << u);
        key &= ~(std::uint64_t{1} << (v * (v - 1) / 2 + u));
    }

    void complete_next() {
        Vertex u = n;
        for (Vertex v = 0; v < n; ++v)
            if (degree[v] < 3) { u = v; break; }
        if (u == n) {
            out->push_back(key);
            return;
        }
        // all remaining neighbors of the lowest unsaturated vertex exceed it,
        // so choosing them as an ascending combination visits each labeled
        // graph exactly once
        Vertex candidates[10];
        int candidate_count = 0;
        for (Vertex v = u + 1; v < n; ++v)
            if (degree[v] < 3 && !(nbr_mask[u] >> v & 1)) candidates[candidate_count++] = v;
        choose(u, candidates, candidate_count, 0, 3 - degree[u]);
    }

    void choose(Vertex u, const Vertex* candidates, int candidate_count, int from, int need) {
        if (need == 0) {
            complete_next();
            return;
        }
        for (int i = from; i + need <= candidate_count; ++i) {
            add_edge(u, candidates[i]);
            choose(u, candidates, candidate_count, i + 1, need - 1);
            remove_edge(u, candidates[i]);
        }
    }
};

} // namespace

StateSpace enumerate_states(Vertex n) {
    if (n < 4 || n > 10 || n % 2 != 0)
        throw Error(ErrorCode::BadN, "state enumeration supports even n in [4, 10], got " +
                                         std::to_string(n));
    StateSpace space;
    space.n = n;
    Enumerator e{n, std::vector<int>(n, 0), std::vector<std::uint16_t>(n, 0), 0, &space.keys};
    e.complete_next();
    std::sort(space.keys.begin(), space.keys.end());
    return space;
}

namespace {

// Lean successor enumeration for BFS paths: invokes fn(new_key) once per
// normalized valid move.
template <typename Fn>
void for_each_successor_key(const CubicGraph& g, std::uint64_t key, Fn&& fn) {
    const Vertex n = g.vertex_count();
    auto bit = [](Vertex a, Vertex b) {
        const Vertex hi = a > b ? a : b, lo = a > b ? b : a;
        return std::uint64_t{1} << (hi * (hi - 1) / 2 + lo);
    };
    static constexpr int kFirst[3] = {0, 0, 1};
    static constexpr int kSecond[3] = {1, 2, 2};
    for (Vertex v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (i == j) continue;
                const Vertex x = nbrs[i], w = nbrs[j];
                if (g.has_edge(x, w)) continue;
                for (Vertex y : g.neighbors(x)) {
                    if (y == v) continue;
                    for (Vertex z : g.neighbors(w)) {
                        if (z == v || z == y || g.has_edge(y, z)) continue;
                        // keep one orientation of the mirror pair
                        if (std::tie(y, x) > std::tie(z, w)) continue;
                        fn(key ^ bit(x, y) ^ bit(w, z) ^ bit(x, w) ^ bit(y, z));
                    }
                }
            }
        for (int k = 0; k < 3; ++k) {
            const Vertex x = nbrs[kFirst[k]], w = nbrs[kSecond[k]];
            if (!g.has_edge(x, w)) continue;
            for (std::size_t e = 0; e < g.oriented_edge_count(); ++e) {
                const auto [y, z] = g.oriented_edge(e);
                if (y == v || y == x || y == w || z == v || z == x || z == w) continue;
                if (g.has_edge(x, y) || g.has_edge(w, z)) continue;
                fn(key ^ bit(x, w) ^ bit(y, z) ^ bit(x, y) ^ bit(w, z));
            }
        }
    }
}

// Open-addressing key -> state id map (indices into the sorted key vector);
// beats binary search on the 1.1e7-state n = 10 space.
class KeyIndex {
public:
    explicit KeyIndex(const std::vector<std::uint64_t>& keys) : keys_(keys) {
        std::size_t cap = 16;
        while (cap < keys.size() * 2) cap <<= 1;
        mask_ = cap - 1;
        slots_.assign(cap, kEmpty);
        for (std::uint32_t id = 0; id < keys.size(); ++id) {
            std::size_t h = hash(keys[id]) & mask_;
            while (slots_[h] != kEmpty) h = (h + 1) & mask_;
            slots_[h] = id;
        }
    }

    std::uint32_t find(std::uint64_t key) const {
        std::size_t h = hash(key) & mask_;
        while (slots_[h] != kEmpty) {
            if (keys_[slots_[h]] == key) return slots_[h];
            h = (h + 1) & mask_;
        }
        return kEmpty;
    }

    static constexpr std::uint32_t kEmpty = 0xffffffffu;

private:
    static std::size_t hash(std::uint64_t x) {
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }

    const std::vector<std::uint64_t>& keys_;
    std::vector<std::uint32_t> slots_;
    std::size_t mask_ = 0;
};

} // namespace

TransitionStructure build_transition_graph(const StateSpace& space) {
    TransitionStructure ts;
    ts.space = &space;
    ts.offsets.assign(space.size() + 1, 0);
    std::vector<std::pair<std::uint32_t, bool>> scratch;
    std::vector<std::vector<TransitionEntry>> rows(space.size());
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        const CubicGraph g = space.graph_at(id);
        scratch.clear();
        for (const auto& move : enumerate_all_moves(g))
            scratch.emplace_back(space.index_of(move.result_key), move.is_make);
        std::sort(scratch.begin(), scratch.end());
        auto& row = rows[id];
        for (const auto& [target, is_make] : scratch) {
            if (row.empty() || row.back().target != target) row.push_back({target, 0, 0});
            if (is_make)
                ++row.back().makes;
            else
                ++row.back().breaks;
        }
        ts.offsets[id + 1] = ts.offsets[id] + row.size();
    }
    ts.entries.reserve(ts.offsets.back());
    for (const auto& row : rows) ts.entries.insert(ts.entries.end(), row.begin(), row.end());
    return ts;
}

namespace {

// BFS eccentricity of one source over the CSR structure.
int eccentricity(const TransitionStructure& ts, std::uint32_t source,
                 std::vector<std::uint32_t>& queue, std::vector<std::int32_t>& dist) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.clear();
    queue.push_back(source);
    dist[source] = 0;
    int depth = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t s = queue[head];
        depth = dist[s];
        for (const auto& entry : ts.row(s))
            if (dist[entry.target] < 0) {
                dist[entry.target] = dist[s] + 1;
                queue.push_back(entry.target);
            }
    }
    return depth;
}

} // namespace

ConnectivityReport verify_irreducibility(const TransitionStructure& ts, bool with_diameter) {
    const std::size_t count = ts.space->size();
    ConnectivityReport report;
    report.states = count;
    std::vector<std::int32_t> component(count, -1);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t seed = 0; seed < count; ++seed) {
        if (component[seed] >= 0) continue;
        const std::int32_t comp = static_cast<std::int32_t>(report.component_count++);
        queue.clear();
        queue.push_back(seed);
        component[seed] = comp;
        std::size_t size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++size;
            for (const auto& entry : ts.row(queue[head]))
                if (component[entry.target] < 0) {
                    component[entry.target] = comp;
                    queue.push_back(entry.target);
                }
        }
        report.largest_component = std::max(report.largest_component, size);
    }
    report.connected = report.component_count == 1;
    if (with_diameter && report.connected) {
        const unsigned threads = std::max(1u, std::thread::hardware_concurrency());
        std::vector<int> best(threads, 0);
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                std::vector<std::uint32_t> local_queue;
                std::vector<std::int32_t> dist(count);
                int ecc_max = 0;
                for (std::uint32_t s = t; s < count; s += threads)
                    ecc_max = std::max(ecc_max, eccentricity(ts, s, local_queue, dist));
                best[t] = ecc_max;
            });
        for (auto& th : pool) th.join();
        report.diameter = *std::max_element(best.begin(), best.end());
    }
    return report;
}

ConnectivityReport streaming_connectivity(const StateSpace& space) {
    ConnectivityReport report;
    report.states = space.size();
    const KeyIndex index(space.keys);
    std::vector<bool> visited(space.size(), false);
    std::vector<std::uint32_t> queue;
    queue.reserve(space.size());
    for (std::uint32_t seed = 0; seed < space.size(); ++seed) {
        if (visited[seed]) continue;
        ++report.component_count;
        queue.clear();
        queue.push_back(seed);
        visited[seed] = true;
        std::size_t size = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            ++size;
            const std::uint64_t key = space.keys[queue[head]];
            const CubicGraph g = graph_from_key(space.n, key);
            for_each_successor_key(g, key, [&](std::uint64_t next_key) {
                const std::uint32_t id = index.find(next_key);
                if (id == KeyIndex::kEmpty)
                    throw Error(ErrorCode::BadN, "move left the enumerated space");
                if (!visited[id]) {
                    visited[id] = true;
                    queue.push_back(id);
                }
            });
        }
        report.largest_component = std::max(report.largest_component, size);
        if (report.component_count > 1) break; // disconnected already proven
    }
    report.connected =
        report.component_count == 1 && report.largest_component == space.size();
    return report;
}

namespace {

bool diamond_on(const CubicGraph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    const int edges = g.has_edge(a, b) + g.has_edge(a, c) + g.has_edge(a, d) +
                      g.has_edge(b, c) + g.has_edge(b, d) + g.has_edge(c, d);
    return edges >= 5; // diamond, or the even better K4
}

bool k4_on(const CubicGraph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
    return g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(a, d) && g.has_edge(b, c) &&
           g.has_edge(b, d) && g.has_edge(c, d);
}

void apply_enumerated(CubicGraph& g, const EnumeratedMove& move) {
    if (move.is_make)
        apply_make(g, move.make);
    else
        apply_break(g, move.brk);
}

void undo_enumerated(CubicGraph& g, const EnumeratedMove& move) {
    if (move.is_make)
        apply_break(g, reverse_of(move.make));
    else
        apply_make(g, reverse_of(move.brk));
}

// Smallest number of moves (0, 1 or 2) after which predicate holds, or -1.
template <typename Pred>
int steps_to_reach(CubicGraph& g, const Pred& predicate) {
    if (predicate(g)) return 0;
    const auto moves = enumerate_all_moves(g);
    for (const auto& move : moves) {
        apply_enumerated(g, move);
        const bool hit = predicate(g);
        undo_enumerated(g, move);
        if (hit) return 1;
    }
    for (const auto& move : moves) {
        apply_enumerated(g, move);
        const auto second = enumerate_all_moves(g);
        for (const auto& move2 : second) {
            apply_enumerated(g, move2);
            const bool hit = predicate(g);
            undo_enumerated(g, move2);
            if (hit) {
                undo_enumerated(g, move);
                return 2;
            }
        }
        undo_enumerated(g, move);
    }
    return -1;
}

std::size_t component_size(const CubicGraph& g, Vertex v) {
    std::uint16_t seen = std::uint16_t(1) << v;
    Vertex stack[16];
    int top = 0;
    stack[top++] = v;
    std::size_t size = 0;
    while (top > 0) {
        const Vertex u = stack[--top];
        ++size;
        for (Vertex c : g.neighbors(u))
            if (!(seen >> c & 1)) {
                seen |= std::uint16_t(1) << c;
                stack[top++] = c;
            }
    }
    return size;
}

} // namespace

StepBoundReport verify_step_bounds(const StateSpace& space) {
    if (space.n != 8)
        throw Error(ErrorCode::BadN, "step bounds are checked at n = 8");
    StepBoundReport report;
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        CubicGraph g = space.graph_at(id);
        const Vertex n = space.n;

        // (a) single-move triangle insertion wherever the closed neighborhood
        // is triangle-free
        for (Vertex v = 0; v < n; ++v) {
            bool neighborhood_free = g.triangles_at(v) == 0;
            for (Vertex u : g.neighbors(v))
                neighborhood_free = neighborhood_free && g.triangles_at(u) == 0;
            if (!neighborhood_free) continue;
            ++report.checked_a;
            const auto move = find_triangle_inserting_make(g, v);
            if (!move) {
                ++report.violations_a;
                continue;
            }
            apply_make(g, *move);
            const bool ok = g.triangles_at(v) > 0;
            apply_break(g, reverse_of(*move));
            if (!ok) ++report.violations_a;
        }

        // (b) every triangle in a component of order >= 8 extends to a
        // diamond within two moves
        for (Vertex v = 0; v < n; ++v)
            for (Vertex x : g.neighbors(v)) {
                if (x < v) continue;
                for (Vertex w : g.neighbors(v)) {
                    if (w < x || !g.has_edge(x, w)) continue;
                    if (component_size(g, v) < 8) continue;
                    ++report.checked_b;
                    const auto extends = [&](const CubicGraph& h) {
                        for (Vertex u = 0; u < n; ++u)
                            if (u != v && u != x && u != w && diamond_on(h, u, v, x, w))
                                return true;
                        return false;
                    };
                    const int steps = steps_to_reach(g, extends);
                    if (steps < 0) ++report.violations_b;
                    if (steps == 2) ++report.depth2_b;
                }
            }

        // (c) every diamond becomes a K4 component within two moves
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b : g.neighbors(a)) {
                if (b < a) continue;
                Vertex common[2];
                int common_count = 0;
                for (Vertex c : g.neighbors(a))
                    if (c != b && g.has_edge(c, b)) common[common_count++] = c;
                if (common_count != 2 || g.has_edge(common[0], common[1])) continue;
                ++report.checked_c; // diamond with diagonal ab
                const Vertex c0 = common[0], c1 = common[1];
                const auto completes = [&](const CubicGraph& h) {
                    return k4_on(h, a, b, c0, c1);
                };
                const int steps = steps_to_reach(g, completes);
                if (steps < 0) ++report.violations_c;
                if (steps == 2) ++report.depth2_c;
            }
    }
    return report;
}

namespace {

void alpha_check_state(const CubicGraph& g, AlphaReport& report) {
    const Vertex n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        const auto qv = enumerate_qv(g, v);
        if (qv.empty()) continue;
        const VertexClass klass = classify_vertex(g, v);
        std::int64_t sum = 0;
        int tally[5] = {0, 0, 0, 0, 0}; // triangles created: index 0..4
        bool tally_ok = true;
        for (const auto& pp : qv) {
            const MakeMove m = make_from_path_pair(v, pp);
            const int d = delta_triangles(g, m);
            sum += d;
            // triangles created = d + (triangles destroyed by removing xy, wz)
            int lost = 0;
            for (Vertex c : g.neighbors(m.x))
                if (c != m.y && g.has_edge(c, m.y)) ++lost;
            for (Vertex c : g.neighbors(m.w))
                if (c != m.z && g.has_edge(c, m.z)) ++lost;
            const int created = d + lost;
            if (created >= 1 && created <= 4)
                ++tally[created];
            else
                tally_ok = false;
        }
        const auto s = static_cast<std::int64_t>(qv.size());
        const double mean = static_cast<double>(sum) / static_cast<double>(s);
        ++report.checked;
        bool ok = true;
        switch (klass) {
            case VertexClass::Free:
                ok = 3 * sum <= 8 * s;
                report.max_mean_free = std::max(report.max_mean_free, mean);
                if (3 * sum == 8 * s && s == 9 && tally_ok && tally[4] == 3 && tally[3] == 0 &&
                    tally[2] == 6 && tally[1] == 0)
                    ++report.hypercube_attainments;
                if (tally_ok) {
                    ++report.psi_checked;
                    const std::int64_t weighted =
                        4 * tally[4] + 3 * tally[3] + 2 * tally[2] + tally[1];
                    if (3 * weighted > 8 * s) ++report.psi_violations;
                }
                break;
            case VertexClass::IsolatedTriangle:
                ok = sum <= 3 * s;
                report.max_mean_iso = std::max(report.max_mean_iso, mean);
                break;
            case VertexClass::DiamondExternal:
                ok = sum <= s;
                report.max_mean_dext = std::max(report.max_mean_dext, mean);
                break;
            case VertexClass::DiamondInternal:
                ok = sum <= 4 * s;
                report.max_mean_dint = std::max(report.max_mean_dint, mean);
                break;
            case VertexClass::Tetrahedron:
                ok = false; // Q_v must be empty in a K4 component
                break;
        }
        if (!ok) ++report.violations;
    }
}

} // namespace

AlphaReport verify_alpha_bounds(const StateSpace& space) {
    AlphaReport report;
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        const CubicGraph g = space.graph_at(id);
        alpha_check_state(g, report);
    }
    return report;
}

AlphaReport verify_alpha_bounds_sampled(const StateSpace& space, std::size_t sample_size,
                                        std::uint64_t seed) {
    AlphaReport report;
    Rng rng(seed);
    for (std::size_t i = 0; i < sample_size; ++i) {
        const auto id = static_cast<std::uint32_t>(rng.below(space.size()));
        const CubicGraph g = space.graph_at(id);
        alpha_check_state(g, report);
    }
    return report;
}

double StochasticMatrix::at(std::uint32_t from, std::uint32_t to) const {
    if (from == to) return diagonal[from];
    const auto begin = entries.begin() + static_cast<std::ptrdiff_t>(offsets[from]);
    const auto end = entries.begin() + static_cast<std::ptrdiff_t>(offsets[from + 1]);
    const auto it = std::lower_bound(begin, end, to,
                                     [](const auto& e, std::uint32_t t) { return e.first < t; });
    return it != end && it->first == to ? it->second : 0.0;
}

StochasticMatrix build_chain_matrix(const StateSpace& space, const ChainConfig& cfg) {
    cfg.validate();
    const double n = static_cast<double>(space.n);
    StochasticMatrix m;
    m.size = space.size();
    m.offsets.assign(space.size() + 1, 0);
    m.diagonal.assign(space.size(), 0.0);
    std::vector<std::pair<std::uint32_t, double>> row;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> rows(space.size());

    for (std::uint32_t id = 0; id < space.size(); ++id) {
        const CubicGraph g = space.graph_at(id);
        row.clear();
        switch (cfg.kind) {
            case ChainKind::I: {
                for (const auto& move : enumerate_all_moves(g)) {
                    const double prob = move.is_make ? cfg.p / (12.0 * n)
                                                     : cfg.q / (9.0 * n * n);
                    row.emplace_back(space.index_of(move.result_key), prob);
                }
                break;
            }
            case ChainKind::II: {
                const std::uint64_t key = edge_set_key(g);
                auto bit = [](Vertex a, Vertex b) {
                    const Vertex hi = a > b ? a : b, lo = a > b ? b : a;
                    return std::uint64_t{1} << (hi * (hi - 1) / 2 + lo);
                };
                for (Vertex v = 0; v < space.n; ++v) {
                    const int tri = g.triangles_at(v);
                    if (tri < 3) {
                        const auto qv = enumerate_qv(g, v);
                        if (qv.empty())
                            throw Error(ErrorCode::NotStochastic,
                                        "empty Q_v on a make branch with tri <= 2");
                        const double make_prob =
                            (1.0 / n) * (1.0 - tri / 3.0) / static_cast<double>(qv.size());
                        for (const auto& pp : qv) {
                            const std::uint64_t target = key ^ bit(pp.x, pp.y) ^ bit(pp.w, pp.z) ^
                                                         bit(pp.x, pp.w) ^ bit(pp.y, pp.z);
                            row.emplace_back(space.index_of(target), make_prob);
                        }
                    }
                    if (tri > 0) {
                        // ordered representative + oriented edge: 1/(18 n^2)
                        // each; the two mirror draws of a break sum to 1/(9 n^2)
                        const double break_prob = 1.0 / (18.0 * n * n);
                        static constexpr int kOrdered[6][2] = {{0, 1}, {0, 2}, {1, 0},
                                                               {1, 2}, {2, 0}, {2, 1}};
                        const auto& nbrs = g.neighbors(v);
                        for (const auto& pick : kOrdered) {
                            const Vertex x = nbrs[pick[0]], w = nbrs[pick[1]];
                            if (!g.has_edge(x, w)) continue;
                            for (std::size_t e = 0; e < g.oriented_edge_count(); ++e) {
                                const auto [y, z] = g.oriented_edge(e);
                                const BreakMove b{v, x, w, y, z};
                                if (!break_valid(g, b)) continue;
                                const std::uint64_t target = key ^ bit(x, w) ^ bit(y, z) ^
                                                             bit(x, y) ^ bit(w, z);
                                row.emplace_back(space.index_of(target), break_prob);
                            }
                        }
                    }
                }
                break;
            }
            case ChainKind::MetropolisSwitch: {
                const auto edges = g.edges();
                const std::uint64_t key = edge_set_key(g);
                auto bit = [](Vertex a, Vertex b) {
                    const Vertex hi = a > b ? a : b, lo = a > b ? b : a;
                    return std::uint64_t{1} << (hi * (hi - 1) / 2 + lo);
                };
                const double mm = static_cast<double>(edges.size());
                const double pair_prob = 2.0 / (mm * mm) / 3.0;
                for (std::size_t i = 0; i < edges.size(); ++i)
                    for (std::size_t j = i + 1; j < edges.size(); ++j) {
                        const auto [a1, b1] = edges[i];
                        const auto [a2, b2] = edges[j];
                        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) continue;
                        for (int matching = 1; matching <= 2; ++matching) {
                            const Edge ad1 = matching == 1 ? Edge{a1, a2} : Edge{a1, b2};
                            const Edge ad2 = matching == 1 ? Edge{b1, b2} : Edge{b1, a2};
                            if (g.has_edge(ad1.first, ad1.second) ||
                                g.has_edge(ad2.first, ad2.second))
                                continue;
                            const int d_tri =
                                detail::swap_delta_triangles(g, edges[i], edges[j], ad1, ad2);
                            const double accept = std::pow(cfg.q, 4 - d_tri);
                            const std::uint64_t target = key ^ bit(a1, b1) ^ bit(a2, b2) ^
                                                         bit(ad1.first, ad1.second) ^
                                                         bit(ad2.first, ad2.second);
                            row.emplace_back(space.index_of(target), pair_prob * accept);
                        }
                    }
                break;
            }
            case ChainKind::O:
                throw Error(ErrorCode::BadConfig,
                            "exact matrix is built for chains I, II and metropolis only");
        }
        std::sort(row.begin(), row.end());
        auto& stored = rows[id];
        double off_diagonal = 0.0;
        for (const auto& [target, prob] : row) {
            if (target == id) { // moves mapping a state to itself join the self-loop
                m.diagonal[id] += prob;
                continue;
            }
            if (!stored.empty() && stored.back().first == target)
                stored.back().second += prob;
            else
                stored.emplace_back(target, prob);
            off_diagonal += prob;
        }
        if (off_diagonal + m.diagonal[id] > 1.0 + 1e-12)
            throw Error(ErrorCode::NotStochastic, "row mass exceeds 1");
        m.diagonal[id] += 1.0 - off_diagonal - m.diagonal[id];
        m.offsets[id + 1] = m.offsets[id] + stored.size();
    }
    m.entries.reserve(m.offsets.back());
    for (auto& stored : rows) m.entries.insert(m.entries.end(), stored.begin(), stored.end());
    return m;
}

std::vector<double> stationary_distribution(const StochasticMatrix& m, double tol) {
    std::vector<double> x(m.size, 1.0 / static_cast<double>(m.size));
    std::vector<double> next(m.size);
    for (std::size_t iteration = 0; iteration < 20'000'000; ++iteration) {
        std::fill(next.begin(), next.end(), 0.0);
        for (std::uint32_t i = 0; i < m.size; ++i) {
            const double mass = x[i];
            next[i] += mass * m.diagonal[i];
            for (std::uint64_t e = m.offsets[i]; e < m.offsets[i + 1]; ++e)
                next[m.entries[e].first] += mass * m.entries[e].second;
        }
        double total = 0.0;
        for (double v : next) total += v;
        for (double& v : next) v /= total;
        double residual = 0.0;
        for (std::uint32_t i = 0; i < m.size; ++i)
            residual = std::max(residual, std::abs(next[i] - x[i]));
        x.swap(next);
        if (residual < tol) return x;
    }
    throw Error(ErrorCode::NotStochastic, "power iteration did not converge");
}

double detailed_balance_violation(const StochasticMatrix& m, std::span<const double> pi) {
    double worst = 0.0;
    for (std::uint32_t i = 0; i < m.size; ++i)
        for (std::uint64_t e = m.offsets[i]; e < m.offsets[i + 1]; ++e) {
            const auto [j, p_ij] = m.entries[e];
            const double flow = pi[i] * p_ij - pi[j] * m.at(j, i);
            worst = std::max(worst, std::abs(flow));
        }
    return worst;
}

} // namespace trichain
