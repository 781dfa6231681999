#include "trichain/bounds.hpp"

#include <cmath>

#include "trichain/error.hpp"

namespace trichain {

double f_lower(double s) { return 3.0 - 10.0 * s - (10.0 / 3.0) * s * s; }

double g_upper(double x) { return 8.0 / 3.0 - 3.0 * x - 2.0 * x * x; }

double s_plus_closed_form() { return 3.0 * (std::sqrt(140.0) - 10.0) / 20.0; }

double upper_root_closed_form() { return (-9.0 + std::sqrt(273.0)) / 12.0; }

namespace {

template <typename Fn>
double bisect_root(Fn&& fn, double lo, double hi) {
    // fn(lo) > 0 > fn(hi); 200 halvings take the bracket well under 1e-12
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (fn(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace

double s_plus_bisection() { return bisect_root(f_lower, 0.0, 1.0); }

double upper_root_bisection() { return bisect_root(g_upper, 0.0, 1.0); }

double chain1_lower(double p) { return p / (72.0 - 63.0 * p); }

double chain1_quadratic(double s, double p) {
    return s * s * 10.0 * (1.0 - p) / 3.0 + s * (4.0 - 7.0 * p / 2.0) - p / 4.0;
}

double chain1_quadratic_positive_root(double p) {
    // f(0) = -p/4 < 0 and f(1) > 0 for p in (0,1)
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (chain1_quadratic(mid, p) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double chain1_root_lower_bound(double p) { return p / (24.0 - 21.0 * p); }

double psi(std::int64_t i, std::int64_t j, std::int64_t k) {
    const std::int64_t total = i + j + k;
    if (total == 0) throw Error(ErrorCode::AllZero, "psi needs a nonempty tally");
    return static_cast<double>(4 * i + 3 * j + 2 * k) / static_cast<double>(total);
}

double psi_prime(std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t m) {
    const std::int64_t total = i + j + l + m;
    if (total == 0) throw Error(ErrorCode::AllZero, "psi' needs a nonempty tally");
    return static_cast<double>(4 * i + 3 * j + 2 * l + m) / static_cast<double>(total);
}

DriftReport drift_report(double p) {
    DriftReport report;
    report.s_plus = s_plus_closed_form();
    report.x_upper = upper_root_closed_form();
    report.alpha = report.s_plus / 3.0;
    report.chain1_bound = chain1_lower(p);
    report.p = p;
    return report;
}

} // namespace trichain
