#include "doctest.h"

#include <cmath>

#include "trichain/bounds.hpp"
#include "trichain/error.hpp"

using namespace trichain;

TEST_CASE("lower drift quadratic") {
    CHECK(f_lower(0.0) == doctest::Approx(3.0));
    CHECK(f_lower(0.2748) > 0.0);
    CHECK(f_lower(0.275) < 0.0);
}

TEST_CASE("positive root of the lower quadratic") {
    const double closed = s_plus_closed_form();
    CHECK(closed > 0.2748);
    CHECK(closed < 0.2749);
    CHECK(std::abs(closed - s_plus_bisection()) < 1e-12);
    CHECK(std::abs(f_lower(closed)) < 1e-10);
}

TEST_CASE("upper drift quadratic") {
    CHECK(g_upper(0.0) == doctest::Approx(8.0 / 3.0));
    CHECK(g_upper(0.63) < 0.0);
    const double root = upper_root_closed_form();
    CHECK(root < 0.627);
    CHECK(root > 0.6268);
    CHECK(root < 0.6269);
    CHECK(std::abs(root - upper_root_bisection()) < 1e-12);
}

TEST_CASE("chain I density bound") {
    CHECK(chain1_lower(1.0) == doctest::Approx(1.0 / 9.0));
    double previous = 0.0;
    for (double p = 0.05; p < 1.0; p += 0.05) {
        const double bound = chain1_lower(p);
        CHECK(bound > previous); // monotone increasing in p
        previous = bound;
    }
}

TEST_CASE("chain I drift quadratic and its root bound") {
    for (double p = 0.1; p < 0.95; p += 0.1) {
        CHECK(chain1_quadratic(0.0, p) < 0.0);
        const double root = chain1_quadratic_positive_root(p);
        CHECK(std::abs(chain1_quadratic(root, p)) < 1e-10);
        CHECK(root >= chain1_root_lower_bound(p));
    }
}

TEST_CASE("psi values") {
    CHECK(psi(3, 0, 6) == doctest::Approx(8.0 / 3.0));
    CHECK(psi_prime(3, 0, 0, 6) == doctest::Approx(2.0));
    for (int k = 1; k <= 10; ++k) CHECK(psi(0, 0, k) == doctest::Approx(2.0));
    CHECK_THROWS_AS(psi(0, 0, 0), Error);
    CHECK_THROWS_AS(psi_prime(0, 0, 0, 0), Error);
}

TEST_CASE("psi bound is equivalent to the linear constraint") {
    // psi(i, j, s-i-j) <= 8/3  <=>  3(2i + j) <= 2s, both integer forms
    for (std::int64_t i = 0; i <= 12; ++i)
        for (std::int64_t j = 0; j + i <= 24; ++j)
            for (std::int64_t k = (i + j == 0 ? 1 : 0); i + j + k <= 30; ++k) {
                const std::int64_t s = i + j + k;
                const bool psi_small = 3 * (4 * i + 3 * j + 2 * k) <= 8 * s;
                const bool linear = 3 * (2 * i + j) <= 2 * s;
                CHECK(psi_small == linear);
            }
}

TEST_CASE("drift report") {
    const auto report = drift_report(0.5);
    CHECK(report.s_plus == doctest::Approx(s_plus_closed_form()));
    CHECK(report.alpha == doctest::Approx(report.s_plus / 3.0));
    CHECK(report.alpha > 0.0916);
    CHECK(report.chain1_bound == doctest::Approx(0.5 / (72.0 - 31.5)));
    CHECK(kBreakLossTable[1][1] == 8); // two diamond diagonals is the worst case
}
