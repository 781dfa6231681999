#pragma once

#include <cstdint>

namespace trichain {

/// Drift lower bound for the fraction s of vertices in triangles:
/// f(s) = 3 - 10s - (10/3) s^2.  Positive at 0, one positive root s+.
double f_lower(double s);

/// Drift upper bound for the triangle density x = Delta/n:
/// g(x) = 8/3 - 3x - 2x^2, root at (-9 + sqrt(273))/12 < 0.627.
double g_upper(double x);

/// Positive root of f_lower, closed form 3(sqrt(140) - 10)/20.
double s_plus_closed_form();
/// Positive root of g_upper, closed form (-9 + sqrt(273))/12.
double upper_root_closed_form();

/// Same roots by bisection, for cross-checking (agree to 1e-12).
double s_plus_bisection();
double upper_root_bisection();

/// Long-run triangle-density lower bound for Chain I: p / (72 - 63p)
/// per vertex (the (1 - eps) factor is the caller's).
double chain1_lower(double p);

/// The Chain I drift quadratic f(s) = s^2 * 10(1-p)/3 + s(4 - 7p/2) - p/4;
/// its positive root is at least p / (24 - 21p).
double chain1_quadratic(double s, double p);
double chain1_quadratic_positive_root(double p);
double chain1_root_lower_bound(double p); // p / (24 - 21p)

/// Expected triangle-increase of a uniform Q_v make, by path-pair tally:
/// psi(i, j, k) = (4i + 3j + 2k) / (i + j + k), and the exact four-way form
/// psi'(i, j, l, m) = (4i + 3j + 2l + m) / (i + j + l + m).
/// Throws AllZero on an empty tally.
double psi(std::int64_t i, std::int64_t j, std::int64_t k);
double psi_prime(std::int64_t i, std::int64_t j, std::int64_t l, std::int64_t m);

struct DriftReport {
    double s_plus;          // in (0.2748, 0.2749)
    double x_upper;         // in (0.6268, 0.6269)
    double alpha;           // s_plus / 3, the long-run density constant
    double chain1_bound;    // chain1_lower(p) for the requested p
    double p;
};

DriftReport drift_report(double p);

/// Worst-case loss of triangle vertices for one break, by where the broken
/// triangle and the paired edge yz sit (rows: triangle in a tetrahedron /
/// not; columns: yz in a tetrahedron, in a triangle only, in no triangle).
inline constexpr int kBreakLossTable[2][3] = {
    {0, 4, 0}, // triangle belongs to a tetrahedron
    {4, 8, 4}, // triangle in a diamond or isolated
};

} // namespace trichain
