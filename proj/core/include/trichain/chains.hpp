#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <variant>
#include <vector>

#include "trichain/cubic_graph.hpp"
#include "trichain/rng.hpp"
#include "trichain/switch_moves.hpp"

namespace trichain {

enum class ChainKind { O, I, II, MetropolisSwitch };

const char* to_string(ChainKind kind) noexcept;

struct ChainConfig {
    ChainKind kind = ChainKind::II;
    double p = 0.5;                 // make probability (Chains O, I)
    double q = 0.5;                 // break probability (Chain I) / Metropolis base
    std::uint64_t seed = 0;
    std::uint64_t steps = 0;
    std::uint64_t sample_every = 1;

    /// Throws BadConfig unless the parameters the chain reads lie in (0,1)
    /// and sample_every >= 1.  Chain II ignores p and q.
    void validate() const;
};

enum class StepKind {
    MakeApplied,
    BreakApplied,
    RejectedProposal, // a fully formed proposal failed validity or Metropolis acceptance
    NoOp,             // no proposal formed (empty site set) or probability coin declined
};

/// Plain 2-edge switch as applied by the Metropolis proposal step (record
/// type for traces only; make/break are the public move API).
struct SwitchMove {
    Edge removed1, removed2, added1, added2;
};

using AppliedMove = std::variant<MakeMove, BreakMove, SwitchMove>;

struct StepOutcome {
    StepKind kind = StepKind::NoOp;
    LocalDelta delta{};
    std::optional<AppliedMove> move;

    bool applied() const {
        return kind == StepKind::MakeApplied || kind == StepKind::BreakApplied;
    }
};

/// Chain O step.  Draw order: branch coin; site index in M (or B); for a
/// make, a role-assignment bit for (x, w) then one 2-way draw each for y and
/// z; for a break, an oriented-edge index in [0, 3n).  An empty drawn site
/// set resolves as NoOp.
StepOutcome step_chain_o(CubicGraph& g, TripleSets& sets, double p, Rng& rng);

/// Chain I step.  Draw order: vertex v in [0, n); ordered neighbor pair
/// index in [0, 6); then break branch if the pair is an edge (oriented-edge
/// index, validity, acceptance coin against q) else make branch (2-way draws
/// for y and z, validity, acceptance coin against p).  Each distinct make
/// has probability p/(12n) and each distinct break q/(9n^2).
StepOutcome step_chain_i(CubicGraph& g, double p, double q, Rng& rng);

/// Chain II step.  Draw order: vertex v; branch coin against tri_v/3; break
/// branch draws an oriented triangle representative in [0, 2*tri_v) and an
/// oriented edge; make branch draws uniformly from Q_v (never empty there).
StepOutcome step_chain_ii(CubicGraph& g, Rng& rng);

/// Metropolis switch step.  Draw order: two edge indices in [0, 3n/2) (equal
/// indices: NoOp); matching index in [0, 3) (0 proposes the identity: NoOp);
/// acceptance coin against q^(Delta(G) - Delta(G') + 4) on valid proposals.
StepOutcome step_metropolis_switch(CubicGraph& g, double q, Rng& rng);

/// Census and acceptance counters sampled at one instant of a run.
struct TraceRecord {
    std::uint64_t step = 0;
    std::int64_t delta = 0, iso = 0, dia = 0, tet = 0, free = 0;
    std::uint64_t makes_applied = 0;
    std::uint64_t breaks_applied = 0;
    std::uint64_t rejections = 0;

    bool operator==(const TraceRecord&) const = default;
};

struct RunResult {
    std::vector<TraceRecord> trace;
    CubicGraph graph;
    MotifCensus census;
    std::uint64_t makes_applied = 0;
    std::uint64_t breaks_applied = 0;
    std::uint64_t rejections = 0;
    std::uint64_t noops = 0;
};

using MoveSink = std::function<void(std::uint64_t step, const AppliedMove&)>;

/// Runs cfg.steps steps from g0, maintaining the census incrementally and
/// emitting a record at step 0 and at every multiple of sample_every.
/// Deterministic in (g0, cfg.seed).  sink, when set, receives every applied
/// move in execution order.
RunResult run_chain(CubicGraph g0, const ChainConfig& cfg, const MoveSink* sink = nullptr);

/// Exact uniform sample from G_n: configuration-model pairing with rejection
/// of loops and parallel edges.
CubicGraph sample_uniform_cubic(Vertex n, Rng& rng);

/// Trace CSV: header step,delta,iso,dia,tet,free,makes_applied,
/// breaks_applied,rejections and one row per record.
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);
std::vector<TraceRecord> read_trace_csv(std::istream& in);

/// Replay log lines ("M ...", "B ...", "S a b c d e f g h") applied in order.
void write_replay_line(std::ostream& out, const AppliedMove& move);
void apply_replay_log(CubicGraph& g, std::istream& in);

} // namespace trichain
