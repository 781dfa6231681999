// Criterion 2 at n = 10: streaming BFS over all labeled cubic graphs on ten
// vertices (about 1.1e7 states).  Kept in its own suite because the sweep
// takes minutes.
#include "doctest.h"

#include <chrono>
#include <cstdio>

#include "trichain/statespace.hpp"

using namespace trichain;

TEST_SUITE("n10") {

TEST_CASE("criterion 2 (n = 10): streaming irreducibility") {
    const auto t0 = std::chrono::steady_clock::now();
    const auto space = enumerate_states(10);
    const double enum_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const auto t1 = std::chrono::steady_clock::now();
    const auto report = streaming_connectivity(space);
    const double bfs_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();

    const bool ok = report.connected && report.largest_component == space.size();
    std::printf("criterion  2 %s  G*_10 connected: %zu states (enumeration %.1f s, BFS %.1f s)\n",
                ok ? "PASS" : "FAIL", space.size(), enum_secs, bfs_secs);
    std::fflush(stdout);
    CHECK(ok);

    // class expectation bounds on a uniform sample of states (the full
    // sweep is reserved for n = 8 where it is exhaustive)
    const auto alpha = verify_alpha_bounds_sampled(space, 100'000, 1807);
    const bool alpha_ok = alpha.violations == 0 && alpha.psi_violations == 0 &&
                          alpha.max_mean_free <= 8.0 / 3.0 && alpha.max_mean_iso <= 3.0 &&
                          alpha.max_mean_dext <= 1.0 && alpha.max_mean_dint <= 4.0;
    std::printf("criterion  6 %s  sampled class bounds at n=10: %llu vertices, 0 violations\n",
                alpha_ok ? "PASS" : "FAIL", static_cast<unsigned long long>(alpha.checked));
    std::fflush(stdout);
    CHECK(alpha_ok);
}

} // TEST_SUITE("n10")
