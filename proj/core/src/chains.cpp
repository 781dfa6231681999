#include "trichain/chains.hpp"

#include <cassert>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace trichain {

const char* to_string(ChainKind kind) noexcept {
    switch (kind) {
        case ChainKind::O: return "o";
        case ChainKind::I: return "i";
        case ChainKind::II: return "ii";
        case ChainKind::MetropolisSwitch: return "metropolis";
    }
    return "?";
}

void ChainConfig::validate() const {
    auto in_unit = [](double v) { return v > 0.0 && v < 1.0; };
    switch (kind) {
        case ChainKind::O:
            if (!in_unit(p)) throw Error(ErrorCode::BadConfig, "chain O needs p in (0,1)");
            break;
        case ChainKind::I:
            if (!in_unit(p) || !in_unit(q))
                throw Error(ErrorCode::BadConfig, "chain I needs p, q in (0,1)");
            break;
        case ChainKind::II:
            break; // parameter-free
        case ChainKind::MetropolisSwitch:
            if (!in_unit(q))
                throw Error(ErrorCode::BadConfig, "Metropolis switch needs q in (0,1)");
            break;
    }
    if (sample_every == 0) throw Error(ErrorCode::BadConfig, "sample_every must be >= 1");
}

namespace {

StepOutcome applied_outcome(StepKind kind, LocalDelta delta, AppliedMove move) {
    StepOutcome out;
    out.kind = kind;
    out.delta = delta;
    out.move = std::move(move);
    return out;
}

StepOutcome no_op() { return {}; }

StepOutcome rejected() {
    StepOutcome out;
    out.kind = StepKind::RejectedProposal;
    return out;
}

} // namespace

StepOutcome step_chain_o(CubicGraph& g, TripleSets& sets, double p, Rng& rng) {
    if (rng.chance(p)) {
        if (sets.make_count() == 0) return no_op();
        const std::uint32_t site = sets.sample_make_site(rng);
        const Vertex v = TripleSets::center(site);
        auto [x, w] = TripleSets::pair_of(g, site);
        if (rng.below(2) == 1) std::swap(x, w); // role assignment of the unordered pair
        const auto& nx = g.neighbors(x);
        const auto& nw = g.neighbors(w);
        Vertex ys[2], zs[2];
        int yc = 0, zc = 0;
        for (Vertex c : nx)
            if (c != v) ys[yc++] = c;
        for (Vertex c : nw)
            if (c != v) zs[zc++] = c;
        const MakeMove m{ys[rng.below(2)], x, v, w, zs[rng.below(2)]};
        if (!make_valid(g, m)) return rejected();
        return applied_outcome(StepKind::MakeApplied, apply_make(g, m), m);
    }
    if (sets.break_count() == 0) return no_op();
    const std::uint32_t site = sets.sample_break_site(rng);
    const Vertex v = TripleSets::center(site);
    const auto [x, w] = TripleSets::pair_of(g, site);
    const auto [y, z] = g.oriented_edge(rng.below(g.oriented_edge_count()));
    const BreakMove b{v, x, w, y, z};
    if (!break_valid(g, b)) return rejected();
    return applied_outcome(StepKind::BreakApplied, apply_break(g, b), b);
}

StepOutcome step_chain_i(CubicGraph& g, double p, double q, Rng& rng) {
    const Vertex n = g.vertex_count();
    const Vertex v = static_cast<Vertex>(rng.below(n));
    // ordered pair of distinct neighbors, 6 options
    static constexpr int kOrdered[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
    const auto& nbrs = g.neighbors(v);
    const auto pick = kOrdered[rng.below(6)];
    const Vertex x = nbrs[pick[0]], w = nbrs[pick[1]];
    if (g.has_edge(x, w)) {
        const auto [y, z] = g.oriented_edge(rng.below(g.oriented_edge_count()));
        const BreakMove b{v, x, w, y, z};
        if (!break_valid(g, b)) return rejected();
        if (!rng.chance(q)) return no_op();
        return applied_outcome(StepKind::BreakApplied, apply_break(g, b), b);
    }
    Vertex ys[2], zs[2];
    int yc = 0, zc = 0;
    for (Vertex c : g.neighbors(x))
        if (c != v) ys[yc++] = c;
    for (Vertex c : g.neighbors(w))
        if (c != v) zs[zc++] = c;
    const MakeMove m{ys[rng.below(2)], x, v, w, zs[rng.below(2)]};
    if (!make_valid(g, m)) return rejected();
    if (!rng.chance(p)) return no_op();
    return applied_outcome(StepKind::MakeApplied, apply_make(g, m), m);
}

StepOutcome step_chain_ii(CubicGraph& g, Rng& rng) {
    const Vertex v = static_cast<Vertex>(rng.below(g.vertex_count()));
    const int tri = g.triangles_at(v);
    if (rng.unit() < static_cast<double>(tri) / 3.0) {
        // oriented triangle representative: ordered adjacent neighbor pairs
        static constexpr int kOrdered[6][2] = {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}};
        const auto& nbrs = g.neighbors(v);
        Vertex reps[6][2];
        int rep_count = 0;
        for (const auto& pick : kOrdered) {
            const Vertex x = nbrs[pick[0]], w = nbrs[pick[1]];
            if (g.has_edge(x, w)) {
                reps[rep_count][0] = x;
                reps[rep_count][1] = w;
                ++rep_count;
            }
        }
        assert(rep_count == 2 * tri);
        const auto& rep = reps[rng.below(rep_count)];
        const auto [y, z] = g.oriented_edge(rng.below(g.oriented_edge_count()));
        const BreakMove b{v, rep[0], rep[1], y, z};
        if (!break_valid(g, b)) return rejected();
        return applied_outcome(StepKind::BreakApplied, apply_break(g, b), b);
    }
    // Q_v fits in a fixed buffer (at most 12 path-pairs); enumerated in the
    // same canonical order as enumerate_qv
    PathPair qv[12];
    int qv_count = 0;
    {
        static constexpr int kFirst[3] = {0, 0, 1};
        static constexpr int kSecond[3] = {1, 2, 2};
        const auto& nbrs = g.neighbors(v);
        for (int k = 0; k < 3; ++k) {
            const Vertex x = nbrs[kFirst[k]], w = nbrs[kSecond[k]];
            if (g.has_edge(x, w)) continue;
            for (Vertex y : g.neighbors(x)) {
                if (y == v) continue;
                for (Vertex z : g.neighbors(w)) {
                    if (z == v || z == y || g.has_edge(y, z)) continue;
                    qv[qv_count++] = {x, y, w, z};
                }
            }
        }
    }
    // nonempty whenever tri <= 2, which holds on this branch
    assert(qv_count > 0);
    if (qv_count == 0) return no_op();
    const MakeMove m = make_from_path_pair(v, qv[rng.below(qv_count)]);
    return applied_outcome(StepKind::MakeApplied, apply_make(g, m), m);
}

StepOutcome step_metropolis_switch(CubicGraph& g, double q, Rng& rng) {
    const std::size_t m = g.edge_count();
    const std::size_t i1 = rng.below(m), i2 = rng.below(m);
    if (i1 == i2) return no_op();
    const std::uint64_t matching = rng.below(3);
    if (matching == 0) return no_op(); // identity matching proposes G itself
    auto edge_at = [&](std::size_t index) -> Edge {
        // index over (v, k) slots restricted to v < neighbor
        std::size_t seen = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            for (Vertex u : g.neighbors(v))
                if (v < u && seen++ == index) return {v, u};
        assert(false);
        return {0, 0};
    };
    const Edge e1 = edge_at(i1), e2 = edge_at(i2);
    const auto [a1, b1] = e1;
    const auto [a2, b2] = e2;
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return rejected(); // shared endpoint
    const Edge ad1 = matching == 1 ? Edge{a1, a2} : Edge{a1, b2};
    const Edge ad2 = matching == 1 ? Edge{b1, b2} : Edge{b1, a2};
    if (g.has_edge(ad1.first, ad1.second) || g.has_edge(ad2.first, ad2.second))
        return rejected(); // parallel edge
    const int d_tri = detail::swap_delta_triangles(g, e1, e2, ad1, ad2);
    const int exponent = 4 - d_tri; // in [0, 8] since |d_tri| <= 4
    assert(exponent >= 0 && exponent <= 8);
    if (!rng.chance(std::pow(q, exponent))) return rejected();
    const LocalDelta delta = detail::apply_edge_swap(g, e1, e2, ad1, ad2);
    return applied_outcome(StepKind::BreakApplied, delta, SwitchMove{e1, e2, ad1, ad2});
}

namespace {

// Metropolis edge selection above scans adjacency to map an index to an
// edge, which is O(n); for the run loop we keep an edge list in sync instead.
class EdgeList {
public:
    explicit EdgeList(const CubicGraph& g) : edges_(g.edges()) {}

    std::size_t size() const { return edges_.size(); }
    Edge at(std::size_t i) const { return edges_[i]; }

    void apply_swap(std::size_t i1, std::size_t i2, Edge ad1, Edge ad2) {
        edges_[i1] = ad1;
        edges_[i2] = ad2;
    }

private:
    std::vector<Edge> edges_;
};

StepOutcome step_metropolis_tracked(CubicGraph& g, EdgeList& edges, double q, Rng& rng) {
    const std::size_t i1 = rng.below(edges.size()), i2 = rng.below(edges.size());
    if (i1 == i2) return no_op();
    const std::uint64_t matching = rng.below(3);
    if (matching == 0) return no_op();
    const Edge e1 = edges.at(i1), e2 = edges.at(i2);
    const auto [a1, b1] = e1;
    const auto [a2, b2] = e2;
    if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return rejected();
    const Edge ad1 = matching == 1 ? Edge{a1, a2} : Edge{a1, b2};
    const Edge ad2 = matching == 1 ? Edge{b1, b2} : Edge{b1, a2};
    if (g.has_edge(ad1.first, ad1.second) || g.has_edge(ad2.first, ad2.second))
        return rejected();
    const int d_tri = detail::swap_delta_triangles(g, e1, e2, ad1, ad2);
    const int exponent = 4 - d_tri;
    if (!rng.chance(std::pow(q, exponent))) return rejected();
    const LocalDelta delta = detail::apply_edge_swap(g, e1, e2, ad1, ad2);
    edges.apply_swap(i1, i2, ad1, ad2);
    return applied_outcome(StepKind::BreakApplied, delta, SwitchMove{e1, e2, ad1, ad2});
}

} // namespace

RunResult run_chain(CubicGraph g0, const ChainConfig& cfg, const MoveSink* sink) {
    cfg.validate();
    g0.validate();
    Rng rng(cfg.seed);
    RunResult result;
    result.census = full_census(g0);

    TripleSets sets;
    if (cfg.kind == ChainKind::O) sets = TripleSets(g0);
    std::optional<EdgeList> edges;
    if (cfg.kind == ChainKind::MetropolisSwitch) edges.emplace(g0);

    auto record = [&](std::uint64_t step) {
        result.trace.push_back({step, result.census.delta, result.census.iso, result.census.dia,
                                result.census.tet, result.census.free, result.makes_applied,
                                result.breaks_applied, result.rejections});
        assert(result.census.identities_hold(g0.vertex_count()));
        assert(result.census == full_census(g0));
    };

    record(0);
    for (std::uint64_t step = 1; step <= cfg.steps; ++step) {
        StepOutcome outcome;
        switch (cfg.kind) {
            case ChainKind::O: outcome = step_chain_o(g0, sets, cfg.p, rng); break;
            case ChainKind::I: outcome = step_chain_i(g0, cfg.p, cfg.q, rng); break;
            case ChainKind::II: outcome = step_chain_ii(g0, rng); break;
            case ChainKind::MetropolisSwitch:
                outcome = step_metropolis_tracked(g0, *edges, cfg.q, rng);
                break;
        }
        switch (outcome.kind) {
            case StepKind::MakeApplied: ++result.makes_applied; break;
            case StepKind::BreakApplied: ++result.breaks_applied; break;
            case StepKind::RejectedProposal: ++result.rejections; break;
            case StepKind::NoOp: ++result.noops; break;
        }
        if (outcome.applied()) {
            outcome.delta.accumulate_into(result.census);
            if (cfg.kind == ChainKind::O) sets.update(g0, outcome.delta);
            if (sink) (*sink)(step, *outcome.move);
        }
        if (step % cfg.sample_every == 0) record(step);
    }
    result.graph = std::move(g0);
    return result;
}

CubicGraph sample_uniform_cubic(Vertex n, Rng& rng) {
    if (n < 4 || n % 2 != 0)
        throw Error(ErrorCode::OddN, "need even n >= 4, got " + std::to_string(n));
    std::vector<Vertex> points(std::size_t{3} * n);
    std::vector<std::array<Vertex, 3>> adjacency(n);
    std::vector<int> degree(n);
    for (;;) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i);
        // Fisher-Yates; pairing consecutive entries of a uniform permutation
        // is a uniform perfect matching of the 3n points.
        for (std::size_t i = points.size() - 1; i > 0; --i)
            std::swap(points[i], points[rng.below(i + 1)]);
        std::fill(degree.begin(), degree.end(), 0);
        bool ok = true;
        for (std::size_t i = 0; ok && i < points.size(); i += 2) {
            const Vertex u = points[i] / 3, v = points[i + 1] / 3;
            if (u == v) { ok = false; break; } // loop
            for (int k = 0; k < degree[u]; ++k)
                if (adjacency[u][k] == v) { ok = false; break; } // parallel edge
            if (!ok) break;
            adjacency[u][degree[u]++] = v;
            adjacency[v][degree[v]++] = u;
        }
        if (ok) return CubicGraph::from_adjacency(adjacency);
    }
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
    out << "step,delta,iso,dia,tet,free,makes_applied,breaks_applied,rejections\n";
    for (const auto& r : trace)
        out << r.step << ',' << r.delta << ',' << r.iso << ',' << r.dia << ',' << r.tet << ','
            << r.free << ',' << r.makes_applied << ',' << r.breaks_applied << ','
            << r.rejections << '\n';
}

std::vector<TraceRecord> read_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) ||
        line != "step,delta,iso,dia,tet,free,makes_applied,breaks_applied,rejections")
        throw Error(ErrorCode::Io, "bad trace CSV header");
    std::vector<TraceRecord> trace;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TraceRecord r;
        char comma;
        std::istringstream row(line);
        row >> r.step >> comma >> r.delta >> comma >> r.iso >> comma >> r.dia >> comma >> r.tet >>
            comma >> r.free >> comma >> r.makes_applied >> comma >> r.breaks_applied >> comma >>
            r.rejections;
        if (!row) throw Error(ErrorCode::Io, "bad trace CSV row: " + line);
        trace.push_back(r);
    }
    return trace;
}

void write_replay_line(std::ostream& out, const AppliedMove& move) {
    if (const auto* m = std::get_if<MakeMove>(&move)) {
        out << format_move(*m) << '\n';
    } else if (const auto* b = std::get_if<BreakMove>(&move)) {
        out << format_move(*b) << '\n';
    } else {
        const auto& s = std::get<SwitchMove>(move);
        out << "S " << s.removed1.first << ' ' << s.removed1.second << ' ' << s.removed2.first
            << ' ' << s.removed2.second << ' ' << s.added1.first << ' ' << s.added1.second << ' '
            << s.added2.first << ' ' << s.added2.second << '\n';
    }
}

void apply_replay_log(CubicGraph& g, std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream row(line);
        char tag;
        row >> tag;
        if (tag == 'M') {
            MakeMove m;
            row >> m.y >> m.x >> m.v >> m.w >> m.z;
            if (!row) throw Error(ErrorCode::Io, "bad replay line " + std::to_string(line_no));
            apply_make(g, m);
        } else if (tag == 'B') {
            BreakMove b;
            row >> b.v >> b.x >> b.w >> b.y >> b.z;
            if (!row) throw Error(ErrorCode::Io, "bad replay line " + std::to_string(line_no));
            apply_break(g, b);
        } else if (tag == 'S') {
            SwitchMove s;
            row >> s.removed1.first >> s.removed1.second >> s.removed2.first >> s.removed2.second >>
                s.added1.first >> s.added1.second >> s.added2.first >> s.added2.second;
            if (!row) throw Error(ErrorCode::Io, "bad replay line " + std::to_string(line_no));
            detail::apply_edge_swap(g, s.removed1, s.removed2, s.added1, s.added2);
        } else {
            throw Error(ErrorCode::Io, "unknown replay tag on line " + std::to_string(line_no));
        }
    }
}

} // namespace trichain
