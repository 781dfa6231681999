// trichain: simulate triangle-switch chains on labeled cubic graphs, and
// exactly analyze them on small vertex counts.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "trichain/bounds.hpp"
#include "trichain/chains.hpp"
#include "trichain/graph6.hpp"
#include "trichain/statespace.hpp"

using namespace trichain;

namespace {

constexpr int kExitBadFlags = 2;
constexpr int kExitIo = 3;
constexpr int kExitBadStart = 4;

struct SimulateOptions {
    std::string chain = "ii";
    unsigned n = 1000;
    std::uint64_t steps = 0;
    double p = 0.5;
    double q = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t sample_every = 1;
    std::string start = "k4packing";
    std::string out;
    unsigned replicas = 1;
    unsigned burnin_factor = 20;
};

ChainKind parse_chain(const std::string& name) {
    if (name == "o") return ChainKind::O;
    if (name == "i") return ChainKind::I;
    if (name == "ii") return ChainKind::II;
    if (name == "metropolis") return ChainKind::MetropolisSwitch;
    throw Error(ErrorCode::BadConfig, "unknown chain: " + name);
}

/// Distinguishes start-graph failures (exit 4) from other errors.
class StartGraphError : public Error {
public:
    explicit StartGraphError(const Error& e) : Error(e.code(), e.what()) {}
};

/// Start-graph menu.  "uniform" draws from a stream derived from the replica
/// seed, so replicas get independent starts and reruns are identical.
CubicGraph make_start(const std::string& kind, Vertex n, std::uint64_t replica_seed) {
    try {
        if (kind == "k4packing") return triangle_rich_start(n);
        if (kind == "prism-packing") return prism_packing(n);
        if (kind == "trianglefree") return triangle_free_start(n);
        if (kind == "uniform") {
            Rng rng(Rng::derive_seed(replica_seed, 0x5747u));
            return sample_uniform_cubic(n, rng);
        }
        if (kind.rfind("graph6:", 0) == 0) {
            const std::string path = kind.substr(7);
            std::ifstream in(path);
            if (!in) throw Error(ErrorCode::Io, "cannot open start graph file " + path);
            std::string line;
            if (!std::getline(in, line))
                throw Error(ErrorCode::MalformedGraph6, "empty start graph file " + path);
            while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
                line.pop_back();
            const auto g = from_graph6(line);
            if (g.vertex_count() != n)
                throw Error(ErrorCode::BadN, "start graph has n = " +
                                                 std::to_string(g.vertex_count()) +
                                                 ", expected " + std::to_string(n));
            return g;
        }
        throw Error(ErrorCode::BadN, "unknown start graph kind: " + kind);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Io) throw;
        throw StartGraphError(Error(e.code(), std::string("invalid start graph: ") + e.what()));
    }
}

std::string replica_path(const std::string& base, unsigned replica, unsigned replicas) {
    if (replicas == 1) return base;
    return base + ".r" + std::to_string(replica);
}

int run_simulate(const SimulateOptions& opt) {
    ChainConfig cfg;
    cfg.kind = parse_chain(opt.chain);
    cfg.p = opt.p;
    cfg.q = opt.q;
    cfg.steps = opt.steps;
    cfg.sample_every = opt.sample_every;
    cfg.validate();
    if (opt.n < 4 || opt.n % 2 != 0)
        throw Error(ErrorCode::BadConfig, "need even n >= 4");
    if (opt.replicas > 1 && opt.out.empty())
        throw Error(ErrorCode::BadConfig, "--replicas > 1 requires --out");

    struct ReplicaResult {
        RunResult run;
        std::uint64_t seed = 0;
        std::exception_ptr failure;
    };
    std::vector<ReplicaResult> results(opt.replicas);
    std::vector<std::thread> workers;
    for (unsigned r = 0; r < opt.replicas; ++r)
        workers.emplace_back([&, r] {
            try {
                ChainConfig local = cfg;
                local.seed = opt.replicas == 1 ? opt.seed : Rng::derive_seed(opt.seed, r);
                results[r].seed = local.seed;
                results[r].run = run_chain(make_start(opt.start, opt.n, local.seed), local);
            } catch (...) {
                results[r].failure = std::current_exception();
            }
        });
    for (auto& w : workers) w.join();
    for (const auto& result : results)
        if (result.failure) std::rethrow_exception(result.failure);

    const std::uint64_t burn_in = static_cast<std::uint64_t>(opt.burnin_factor) * opt.n;
    for (unsigned r = 0; r < opt.replicas; ++r) {
        const auto& result = results[r].run;
        if (opt.out.empty()) {
            write_trace_csv(std::cout, result.trace);
        } else {
            const auto path = replica_path(opt.out, r, opt.replicas);
            std::ofstream out(path);
            if (!out) throw Error(ErrorCode::Io, "cannot open " + path);
            write_trace_csv(out, result.trace);
            if (!out) throw Error(ErrorCode::Io, "write failed on " + path);
        }
        std::int64_t lo = std::numeric_limits<std::int64_t>::max(), hi = -1;
        double sum = 0;
        std::size_t count = 0;
        for (const auto& rec : result.trace) {
            if (rec.step < burn_in && result.trace.back().step >= burn_in) continue;
            lo = std::min(lo, rec.delta);
            hi = std::max(hi, rec.delta);
            sum += static_cast<double>(rec.delta);
            ++count;
        }
        std::fprintf(stderr,
                     "replica %u: seed %llu, %zu records, post-burn-in delta "
                     "min/mean/max = %lld / %.3f / %lld\n",
                     r, static_cast<unsigned long long>(results[r].seed), result.trace.size(),
                     static_cast<long long>(lo), sum / static_cast<double>(count),
                     static_cast<long long>(hi));
    }
    return 0;
}

int run_enumerate(unsigned n, const std::string& out_path) {
    const auto space = enumerate_states(static_cast<Vertex>(n));
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::Io, "cannot open " + out_path);
        out = &file;
    }
    for (std::uint32_t id = 0; id < space.size(); ++id)
        *out << to_graph6(space.graph_at(id)) << '\n';
    if (!*out) throw Error(ErrorCode::Io, "write failed");
    std::fprintf(stderr, "states: %zu\n", space.size());
    return 0;
}

int run_verify(unsigned n, bool with_diameter, bool with_step_bounds, bool with_alpha, bool as_csv) {
    const auto space = enumerate_states(static_cast<Vertex>(n));
    ConnectivityReport report;
    if (n <= 8 && (with_diameter || n <= 6)) {
        report = verify_irreducibility(build_transition_graph(space), with_diameter);
    } else {
        report = streaming_connectivity(space);
    }
    if (as_csv) {
        std::printf("n,states,connected,components,largest_component,diameter\n");
        std::printf("%u,%zu,%s,%zu,%zu,%d\n", n, space.size(),
                    report.connected ? "true" : "false", report.component_count,
                    report.largest_component, report.diameter);
    } else {
        std::printf("states: %zu\n", space.size());
        std::printf("connected: %s\n", report.connected ? "true" : "false");
        std::printf("components: %zu\n", report.component_count);
        std::printf("largest_component: %zu\n", report.largest_component);
        if (report.diameter >= 0) std::printf("diameter: %d\n", report.diameter);
    }

    if (with_step_bounds) {
        if (n != 8) throw Error(ErrorCode::BadConfig, "--step-bounds runs at n = 8");
        const auto bounds = verify_step_bounds(space);
        std::printf("triangle_insertion_1_move: %llu checked, %llu violations\n",
                    static_cast<unsigned long long>(bounds.checked_a),
                    static_cast<unsigned long long>(bounds.violations_a));
        std::printf("diamond_within_2_moves: %llu checked, %llu violations, %llu needed 2 moves\n",
                    static_cast<unsigned long long>(bounds.checked_b),
                    static_cast<unsigned long long>(bounds.violations_b),
                    static_cast<unsigned long long>(bounds.depth2_b));
        std::printf("k4_within_2_moves: %llu checked, %llu violations\n",
                    static_cast<unsigned long long>(bounds.checked_c),
                    static_cast<unsigned long long>(bounds.violations_c));
    }
    if (with_alpha) {
        const auto alpha = n == 8 ? verify_alpha_bounds(space)
                                  : verify_alpha_bounds_sampled(space, 100'000, 1807);
        std::printf("alpha_bounds: %llu vertices, %llu violations, max means "
                    "%.6f/%.4f/%.4f/%.4f (free/iso/ext/int)\n",
                    static_cast<unsigned long long>(alpha.checked),
                    static_cast<unsigned long long>(alpha.violations), alpha.max_mean_free,
                    alpha.max_mean_iso, alpha.max_mean_dext, alpha.max_mean_dint);
    }
    return 0;
}

int run_stationary(const std::string& chain, unsigned n, double p, double q, bool p_set,
                   bool q_set, const std::string& out_path) {
    ChainConfig cfg;
    cfg.kind = parse_chain(chain);
    // defaults reproduce the uniform-sampling point of chain I
    cfg.p = p_set ? p : 4.0 / (3.0 * n + 4.0);
    cfg.q = q_set ? q : 1.0 - cfg.p;
    cfg.validate();
    const auto space = enumerate_states(static_cast<Vertex>(n));
    const auto matrix = build_chain_matrix(space, cfg);
    const auto pi = stationary_distribution(matrix);

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::Io, "cannot open " + out_path);
        out = &file;
    }
    *out << "state,graph6,delta,probability\n";
    double max_uniform_dev = 0.0;
    for (std::uint32_t id = 0; id < space.size(); ++id) {
        const auto g = space.graph_at(id);
        char prob[40];
        std::snprintf(prob, sizeof prob, "%.17g", pi[id]);
        *out << id << ',' << to_graph6(g) << ',' << full_census(g).delta << ',' << prob << '\n';
        max_uniform_dev = std::max(max_uniform_dev,
                                   std::abs(pi[id] - 1.0 / static_cast<double>(space.size())));
    }
    if (!*out) throw Error(ErrorCode::Io, "write failed");
    std::fprintf(stderr, "chain %s, n=%u, p=%.12g, q=%.12g\n", chain.c_str(), n, cfg.p, cfg.q);
    std::fprintf(stderr, "max_uniform_deviation: %.6e\n", max_uniform_dev);
    std::fprintf(stderr, "detailed_balance_violation: %.6e\n",
                 detailed_balance_violation(matrix, pi));
    return 0;
}

int run_bounds(double p) {
    std::printf("name,value\n");
    std::printf("s_plus,%.17g\n", s_plus_closed_form());
    std::printf("upper_root,%.17g\n", upper_root_closed_form());
    std::printf("chain1_lower,%.17g\n", chain1_lower(p));
    return 0;
}

int run_sample_uniform(unsigned n, unsigned count, std::uint64_t seed,
                       const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error(ErrorCode::Io, "cannot open " + out_path);
        out = &file;
    }
    Rng rng(seed);
    for (unsigned i = 0; i < count; ++i)
        *out << to_graph6(sample_uniform_cubic(static_cast<Vertex>(n), rng)) << '\n';
    if (!*out) throw Error(ErrorCode::Io, "write failed");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"triangle-switch Markov chains on labeled cubic graphs"};
    app.require_subcommand(1);

    SimulateOptions sim;
    auto* simulate = app.add_subcommand("simulate", "run a chain and write a trace CSV");
    simulate->add_option("--chain", sim.chain, "chain kind: o, i, ii, metropolis")
        ->envname("TRICHAIN_CHAIN")
        ->check(CLI::IsMember({"o", "i", "ii", "metropolis"}));
    simulate->add_option("--n", sim.n, "vertex count (even, >= 4)")->envname("TRICHAIN_N");
    simulate->add_option("--steps", sim.steps, "step budget")->envname("TRICHAIN_STEPS");
    simulate->add_option("--p", sim.p, "make probability (chains o, i)")->envname("TRICHAIN_P");
    simulate->add_option("--q", sim.q, "break probability (chain i) / metropolis base")
        ->envname("TRICHAIN_Q");
    simulate->add_option("--seed", sim.seed, "reproducibility seed")->envname("TRICHAIN_SEED");
    simulate->add_option("--sample-every", sim.sample_every, "trace sampling period")
        ->envname("TRICHAIN_SAMPLE_EVERY")
        ->check(CLI::PositiveNumber);
    simulate
        ->add_option("--start", sim.start,
                     "start graph: k4packing, prism-packing, trianglefree, uniform, graph6:<file>")
        ->envname("TRICHAIN_START");
    simulate->add_option("--out", sim.out, "trace CSV path (stdout if omitted)")
        ->envname("TRICHAIN_OUT");
    simulate->add_option("--replicas", sim.replicas, "independent seeded replicas, one file each")
        ->envname("TRICHAIN_REPLICAS")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--burnin-factor", sim.burnin_factor, "burn-in = factor * n steps")
        ->envname("TRICHAIN_BURNIN_FACTOR");

    unsigned enum_n = 6;
    std::string enum_out;
    auto* enumerate = app.add_subcommand("enumerate", "dump all labeled cubic graphs as graph6");
    enumerate->add_option("--n", enum_n, "vertex count (4..10)")->envname("TRICHAIN_N");
    enumerate->add_option("--out", enum_out, "output path (stdout if omitted)")
        ->envname("TRICHAIN_OUT");

    unsigned verify_n = 6;
    bool verify_diameter = false, verify_step_bounds = false, verify_alpha = false,
         verify_csv = false;
    auto* verify = app.add_subcommand("verify", "connectivity and structure checks on G*_n");
    verify->add_option("--n", verify_n, "vertex count (4..10)")->envname("TRICHAIN_N");
    verify->add_flag("--diameter", verify_diameter, "also compute the diameter (n <= 8)");
    verify->add_flag("--step-bounds", verify_step_bounds,
                     "exhaustive one/two-move structure bounds (n = 8)");
    verify->add_flag("--alpha", verify_alpha, "make-move expectation bounds (n = 8 or 10)");
    verify->add_flag("--csv", verify_csv, "print the connectivity report as CSV");

    std::string st_chain = "i", st_out;
    unsigned st_n = 6;
    double st_p = 0, st_q = 0;
    auto* stationary = app.add_subcommand("stationary", "exact stationary distribution");
    stationary->add_option("--chain", st_chain, "chain kind: i, ii, metropolis")
        ->check(CLI::IsMember({"i", "ii", "metropolis"}));
    stationary->add_option("--n", st_n, "vertex count (4..8)")->envname("TRICHAIN_N");
    auto* st_p_opt = stationary->add_option("--p", st_p, "make probability (default 4/(3n+4))");
    auto* st_q_opt = stationary->add_option("--q", st_q, "break probability (default 1-p)");
    stationary->add_option("--out", st_out, "CSV path (stdout if omitted)");

    double bounds_p = 0.5;
    auto* bounds = app.add_subcommand("bounds", "drift roots and the chain I density bound");
    bounds->add_option("--p", bounds_p, "make probability")->envname("TRICHAIN_P");

    unsigned su_n = 6, su_count = 1;
    std::uint64_t su_seed = 0;
    std::string su_out;
    auto* sample = app.add_subcommand("sample-uniform", "exact uniform cubic graphs as graph6");
    sample->add_option("--n", su_n, "vertex count")->envname("TRICHAIN_N");
    sample->add_option("--count", su_count, "number of samples");
    sample->add_option("--seed", su_seed, "reproducibility seed")->envname("TRICHAIN_SEED");
    sample->add_option("--out", su_out, "output path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadFlags;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim);
        if (enumerate->parsed()) return run_enumerate(enum_n, enum_out);
        if (verify->parsed())
            return run_verify(verify_n, verify_diameter, verify_step_bounds, verify_alpha,
                              verify_csv);
        if (stationary->parsed())
            return run_stationary(st_chain, st_n, st_p, st_q, st_p_opt->count() > 0,
                                  st_q_opt->count() > 0, st_out);
        if (bounds->parsed()) return run_bounds(bounds_p);
        if (sample->parsed()) return run_sample_uniform(su_n, su_count, su_seed, su_out);
    } catch (const StartGraphError& e) {
        std::fprintf(stderr, "error [%s]: %s\n", to_string(e.code()), e.what());
        return kExitBadStart;
    } catch (const Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", to_string(e.code()), e.what());
        switch (e.code()) {
            case ErrorCode::Io: return kExitIo;
            case ErrorCode::BadConfig:
            case ErrorCode::BadN:
            case ErrorCode::OddN: return kExitBadFlags;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
