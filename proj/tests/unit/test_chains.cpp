#include "doctest.h"

#include <cmath>
#include <map>
#include <sstream>

#include "oracles.hpp"
#include "trichain/chains.hpp"
#include "trichain/statespace.hpp"

using namespace trichain;

TEST_CASE("seeded runs are reproducible") {
    for (ChainKind kind :
         {ChainKind::O, ChainKind::I, ChainKind::II, ChainKind::MetropolisSwitch}) {
        ChainConfig cfg;
        cfg.kind = kind;
        cfg.p = 0.7;
        cfg.q = 0.4;
        cfg.seed = 20240915;
        cfg.steps = 4000;
        cfg.sample_every = 100;
        const auto start = triangle_rich_start(48);
        const auto first = run_chain(start, cfg);
        const auto second = run_chain(start, cfg);
        CHECK(first.trace == second.trace);
        CHECK(first.graph == second.graph);
    }
}

TEST_CASE("chain O edge cases") {
    SUBCASE("break branch with no break sites is a no-op") {
        auto g = named_graph(NamedGraph::K33);
        TripleSets sets(g);
        Rng rng(5);
        const auto outcome = step_chain_o(g, sets, 0.0, rng); // p = 0 forces the break branch
        CHECK(outcome.kind == StepKind::NoOp);
        CHECK(g == named_graph(NamedGraph::K33));
    }
    SUBCASE("make branch applies a valid move on the prism") {
        auto g = named_graph(NamedGraph::Prism);
        TripleSets sets(g);
        Rng rng(5);
        int applied = 0;
        for (int i = 0; i < 200 && applied == 0; ++i) {
            const auto outcome = step_chain_o(g, sets, 1.0, rng);
            if (outcome.kind == StepKind::MakeApplied) ++applied;
            if (outcome.applied()) sets.update(g, outcome.delta);
        }
        CHECK(applied == 1);
        g.validate();
    }
}

TEST_CASE("chain I from a K4 packing never takes the make branch") {
    // single steps from the fixed state: every neighbor pair is adjacent
    const auto packing = k4_packing(8);
    Rng rng(77);
    for (int i = 0; i < 20000; ++i) {
        CubicGraph g = packing;
        const auto outcome = step_chain_i(g, 0.9, 0.3, rng);
        CHECK(outcome.kind != StepKind::MakeApplied);
    }
}

TEST_CASE("chain II is frozen on a single K4") {
    ChainConfig cfg;
    cfg.kind = ChainKind::II;
    cfg.seed = 3;
    cfg.steps = 1000;
    cfg.sample_every = 1000;
    const auto result = run_chain(named_graph(NamedGraph::K4), cfg);
    CHECK(result.graph == named_graph(NamedGraph::K4));
    CHECK(result.makes_applied == 0);
    CHECK(result.breaks_applied == 0);
}

TEST_CASE("chain II on the hypercube always makes, uniformly over Q_v") {
    const auto q3 = named_graph(NamedGraph::Q3);
    Rng rng(123);
    std::map<std::string, int> seen;
    double delta_sum = 0;
    const int trials = 200000;
    for (int i = 0; i < trials; ++i) {
        CubicGraph g = q3;
        const auto outcome = step_chain_ii(g, rng);
        REQUIRE(outcome.kind == StepKind::MakeApplied);
        delta_sum += outcome.delta.delta;
        const auto& m = std::get<MakeMove>(*outcome.move);
        if (m.v == 0) ++seen[format_move(normalized(m))];
    }
    // expected increase at a free vertex of the hypercube is exactly 8/3
    CHECK(delta_sum / trials == doctest::Approx(8.0 / 3.0).epsilon(0.01));
    // nine path-pairs at the chosen vertex, each equally likely
    CHECK(seen.size() == 9);
    const double expected = trials / 8.0 / 9.0;
    for (const auto& [move, count] : seen)
        CHECK(std::abs(count - expected) < 4.0 * std::sqrt(expected));
}

TEST_CASE("chain I per-move transition law on the prism") {
    // one-step transition frequencies from a fixed state over 10^7 trials:
    // each distinct make has probability p/(12n), each break q/(9n^2)
    const auto prism = named_graph(NamedGraph::Prism);
    const double p = 0.3, q = 0.6;
    const int n = 6;
    std::map<std::string, std::int64_t> counts;
    std::map<std::string, bool> is_make;
    for (const auto& move : enumerate_all_moves(prism)) {
        const auto name = move.is_make ? format_move(move.make) : format_move(move.brk);
        counts[name] = 0;
        is_make[name] = move.is_make;
    }
    REQUIRE_FALSE(counts.empty());
    Rng rng(42424242);
    const std::int64_t trials = 10'000'000;
    for (std::int64_t i = 0; i < trials; ++i) {
        CubicGraph g = prism;
        const auto outcome = step_chain_i(g, p, q, rng);
        if (!outcome.applied()) continue;
        if (const auto* m = std::get_if<MakeMove>(&*outcome.move))
            ++counts.at(format_move(normalized(*m)));
        else
            ++counts.at(format_move(normalized(std::get<BreakMove>(*outcome.move))));
    }
    for (const auto& [name, count] : counts) {
        const double prob = is_make[name] ? p / (12.0 * n) : q / (9.0 * n * n);
        const double mean = trials * prob;
        const double sigma = std::sqrt(trials * prob * (1.0 - prob));
        CHECK(std::abs(count - mean) <= 4.0 * sigma);
    }
}

TEST_CASE("metropolis switch") {
    SUBCASE("graph stays valid and census identities hold") {
        ChainConfig cfg;
        cfg.kind = ChainKind::MetropolisSwitch;
        cfg.q = 0.5;
        cfg.seed = 9;
        cfg.steps = 50000;
        cfg.sample_every = 5000;
        const auto result = run_chain(triangle_free_start(20), cfg);
        result.graph.validate();
        for (const auto& r : result.trace) {
            const MotifCensus census{r.delta, r.iso, r.dia, r.tet, r.free};
            CHECK(census.identities_hold(20));
        }
        CHECK(result.census == full_census(result.graph));
    }
    SUBCASE("single-step form stays valid and the exponent range holds") {
        auto g = triangle_rich_start(10);
        Rng rng(31);
        std::int64_t delta = full_census(g).delta;
        for (int i = 0; i < 2000; ++i) {
            const auto outcome = step_metropolis_switch(g, 0.5, rng);
            if (!outcome.applied()) continue;
            // |delta change| <= 4, so the acceptance exponent lies in [0, 8]
            CHECK(std::abs(outcome.delta.delta) <= 4);
            delta += outcome.delta.delta;
        }
        g.validate();
        CHECK(delta == full_census(g).delta);
    }
}

TEST_CASE("chain II motif-fraction ordering at n = 2000") {
    // vertices on isolated triangles outnumber diamond-diagonal vertices,
    // which outnumber tetrahedron vertices, at every post-burn-in sample
    ChainConfig cfg;
    cfg.kind = ChainKind::II;
    cfg.seed = 1414;
    cfg.steps = 1'000'000;
    cfg.sample_every = 1000;
    const auto result = run_chain(triangle_rich_start(2000), cfg);
    std::size_t samples = 0;
    for (const auto& r : result.trace) {
        if (r.step < 20 * 2000) continue;
        ++samples;
        CHECK(3 * r.iso > 2 * r.dia);
        CHECK(2 * r.dia > 4 * r.tet);
    }
    CHECK(samples > 900);
}

TEST_CASE("run_chain bookkeeping") {
    ChainConfig cfg;
    cfg.kind = ChainKind::II;
    cfg.seed = 17;
    cfg.steps = 5000;
    cfg.sample_every = 500;
    const auto result = run_chain(triangle_free_start(30), cfg);
    CHECK(result.trace.size() == 11); // initial record plus one per sample
    CHECK(result.trace.front().step == 0);
    CHECK(result.trace.back().step == 5000);
    CHECK(result.makes_applied + result.breaks_applied + result.rejections + result.noops ==
          cfg.steps);
    CHECK(result.trace.back().makes_applied == result.makes_applied);

    SUBCASE("zero steps yield a single initial record") {
        cfg.steps = 0;
        const auto single = run_chain(triangle_free_start(30), cfg);
        CHECK(single.trace.size() == 1);
        CHECK(single.trace.front().delta == 0);
    }
}

TEST_CASE("trace CSV round trip") {
    ChainConfig cfg;
    cfg.kind = ChainKind::II;
    cfg.seed = 4;
    cfg.steps = 300;
    cfg.sample_every = 50;
    const auto result = run_chain(triangle_rich_start(16), cfg);
    std::stringstream buffer;
    write_trace_csv(buffer, result.trace);
    CHECK(read_trace_csv(buffer) == result.trace);
}

TEST_CASE("replay log reproduces the run") {
    for (ChainKind kind : {ChainKind::II, ChainKind::MetropolisSwitch}) {
        ChainConfig cfg;
        cfg.kind = kind;
        cfg.q = 0.4;
        cfg.seed = 8;
        cfg.steps = 2000;
        cfg.sample_every = 2000;
        const auto start = triangle_rich_start(24);
        std::stringstream log;
        const MoveSink sink = [&](std::uint64_t, const AppliedMove& move) {
            write_replay_line(log, move);
        };
        const auto result = run_chain(start, cfg, &sink);
        CubicGraph replayed = start;
        apply_replay_log(replayed, log);
        CHECK(replayed == result.graph);
    }
}

TEST_CASE("uniform sampler produces valid cubic graphs") {
    Rng rng(55);
    for (int i = 0; i < 200; ++i) {
        const auto g = sample_uniform_cubic(6, rng);
        g.validate();
        const auto census = full_census(g);
        CHECK((census.delta == 0 || census.delta == 2)); // K33 or prism type
    }
    sample_uniform_cubic(100, rng).validate();
}

TEST_CASE("config validation") {
    ChainConfig cfg;
    cfg.kind = ChainKind::I;
    cfg.p = 0.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.p = 0.5;
    cfg.q = 1.0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.q = 0.5;
    cfg.sample_every = 0;
    CHECK_THROWS_AS(cfg.validate(), Error);
    cfg.sample_every = 1;
    CHECK_NOTHROW(cfg.validate());
    CHECK(Rng::derive_seed(1, 0) != Rng::derive_seed(1, 1));
}
