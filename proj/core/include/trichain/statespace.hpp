#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "trichain/chains.hpp"
#include "trichain/cubic_graph.hpp"

namespace trichain {

/// Indexed enumeration of every labeled simple cubic graph on [n], keyed by
/// the canonical edge-set encoding (keys sorted ascending, id = rank).
struct StateSpace {
    Vertex n = 0;
    std::vector<std::uint64_t> keys;

    std::size_t size() const { return keys.size(); }
    std::uint32_t index_of(std::uint64_t key) const; // throws if absent
    bool contains(std::uint64_t key) const;
    CubicGraph graph_at(std::uint32_t id) const { return graph_from_key(n, keys[id]); }
};

/// Backtracking over degree-constrained edge sets; n even in [4, 10].
StateSpace enumerate_states(Vertex n);

struct TransitionEntry {
    std::uint32_t target;
    std::uint16_t makes;  // number of distinct make moves realizing it
    std::uint16_t breaks;
};

/// Move-adjacency of G*_n in CSR form.  Symmetric as an undirected graph:
/// every make has a reverse break.
struct TransitionStructure {
    const StateSpace* space = nullptr;
    std::vector<std::uint64_t> offsets;
    std::vector<TransitionEntry> entries;

    std::span<const TransitionEntry> row(std::uint32_t id) const {
        return {entries.data() + offsets[id],
                static_cast<std::size_t>(offsets[id + 1] - offsets[id])};
    }
};

TransitionStructure build_transition_graph(const StateSpace& space);

struct ConnectivityReport {
    bool connected = false;
    std::size_t states = 0;
    std::size_t component_count = 0;
    std::size_t largest_component = 0;
    int diameter = -1; // -1 when not computed
};

/// BFS over the built structure; diameter via all-sources BFS when requested.
ConnectivityReport verify_irreducibility(const TransitionStructure& ts,
                                         bool with_diameter = false);

/// Connectivity without materializing transitions: enumerates states, then
/// BFS generating moves on the fly (the n = 10 path; works for any n <= 10).
ConnectivityReport streaming_connectivity(const StateSpace& space);

/// Exhaustive desk-scale checks of the structural step bounds at n = 8:
/// (a) any vertex with a triangle-free neighborhood admits a single move
///     inserting a triangle there,
/// (b) any triangle in a component of order >= 8 extends to a diamond within
///     two moves,
/// (c) any diamond becomes a K4 component within two moves.
struct StepBoundReport {
    std::uint64_t checked_a = 0, violations_a = 0;
    std::uint64_t checked_b = 0, violations_b = 0;
    std::uint64_t checked_c = 0, violations_c = 0;
    std::uint64_t depth2_b = 0; // cases where one move was insufficient
    std::uint64_t depth2_c = 0;

    bool all_hold() const {
        return violations_a == 0 && violations_b == 0 && violations_c == 0;
    }
};

StepBoundReport verify_step_bounds(const StateSpace& space);

/// Per-class exact means of Delta(G') - Delta(G) over uniform Q_v.
/// Bounds: Free 8/3, IsolatedTriangle 3, DiamondExternal 1, DiamondInternal 4.
struct AlphaReport {
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    double max_mean_free = -8, max_mean_iso = -8, max_mean_dext = -8, max_mean_dint = -8;
    // vertices attaining mean exactly 8/3 with |Q_v| = 9 and tally (3,0,6,0)
    std::uint64_t hypercube_attainments = 0;
    // free vertices whose created-triangle tally (i,j,l,m) satisfies
    // (4i+3j+2l+m)/(i+j+l+m) <= 8/3
    std::uint64_t psi_checked = 0;
    std::uint64_t psi_violations = 0;
};

AlphaReport verify_alpha_bounds(const StateSpace& space);
/// Same check on a uniform sample of states (for spaces too large to sweep).
AlphaReport verify_alpha_bounds_sampled(const StateSpace& space,
                                        std::size_t sample_size, std::uint64_t seed);

/// Row-stochastic sparse transition matrix with explicit self-loop mass.
struct StochasticMatrix {
    std::size_t size = 0;
    std::vector<std::uint64_t> offsets;
    std::vector<std::pair<std::uint32_t, double>> entries; // off-diagonal
    std::vector<double> diagonal;

    double at(std::uint32_t from, std::uint32_t to) const;
};

/// Exact one-step matrix of Chain I, Chain II or MetropolisSwitch over the
/// space, built from the per-move probability laws (transitions realized by
/// several moves accumulate).  Throws NotStochastic if any row drifts off 1.
StochasticMatrix build_chain_matrix(const StateSpace& space, const ChainConfig& cfg);

/// Power iteration to max-norm residual < tol.  Converges for these chains:
/// they are irreducible with self-loop mass on at least one state.
std::vector<double> stationary_distribution(const StochasticMatrix& m, double tol = 1e-12);

/// max over pairs of |pi(G) P(G,G') - pi(G') P(G',G)|.
double detailed_balance_violation(const StochasticMatrix& m, std::span<const double> pi);

} // namespace trichain
