#include "slicekit/scalars.hpp"

#include <cmath>

#include "slicekit/errors.hpp"

namespace slicekit {

namespace {

constexpr double kLnPi = 1.1447298858494001741434273513531;
constexpr double kLnSqrt2Pi = 0.91893853320467274178032973640562;

// Lanczos approximation, g = 7, 9 terms. Relative error below 1e-14 for
// x >= 0.5, which covers every half-integer argument used here.
double lanczos_lgamma(double x) {
    static const double c[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7,
    };
    double a = c[0];
    for (int k = 1; k < 9; ++k) a += c[k] / (x - 1.0 + k);
    const double t = x + 6.5; // g + 0.5 above x - 1
    return kLnSqrt2Pi + (x - 0.5) * std::log(t) - t + std::log(a);
}

} // namespace

double log_unit_ball_volume(int n) {
    if (n < 1) throw DomainError("log_unit_ball_volume: dimension must be >= 1");
    return 0.5 * n * kLnPi - lanczos_lgamma(1.0 + 0.5 * n);
}

double sphere_area(int n) {
    if (n < 1) throw DomainError("sphere_area: dimension must be >= 1");
    return n * std::exp(log_unit_ball_volume(n));
}

double log_slicing_constant(int n) {
    if (n < 2) throw DomainError("slicing_constant: dimension must be >= 2");
    return log_unit_ball_volume(n) * (n - 1.0) / n - log_unit_ball_volume(n - 1);
}

double slicing_constant(int n) { return std::exp(log_slicing_constant(n)); }

DimensionConstants dimension_constants(int n) {
    if (n < 2) throw DomainError("dimension_constants: dimension must be >= 2");
    DimensionConstants d;
    d.n = n;
    d.lnBallVol = log_unit_ball_volume(n);
    d.lnBallVolPrev = log_unit_ball_volume(n - 1);
    d.sphereArea = n * std::exp(d.lnBallVol);
    d.slicingConst = slicing_constant(n);
    return d;
}

} // namespace slicekit
