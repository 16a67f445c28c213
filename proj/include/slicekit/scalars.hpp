#pragma once

namespace slicekit {

// Special-function constants per dimension. Volume-scale quantities live in
// log space; |B_2^n| underflows a double near n ~ 350.
struct DimensionConstants {
    int n = 0;
    double lnBallVol = 0.0;     // ln |B_2^n|
    double sphereArea = 0.0;    // |S^{n-1}| = n |B_2^n|
    double lnBallVolPrev = 0.0; // ln |B_2^{n-1}|
    double slicingConst = 0.0;  // c_n = |B_2^n|^{(n-1)/n} / |B_2^{n-1}|, < 1
};

// ln |B_2^n| = (n/2) ln(pi) - lnGamma(1 + n/2). Requires n >= 1.
double log_unit_ball_volume(int n);

// |S^{n-1}| = n |B_2^n|. Requires n >= 1.
double sphere_area(int n);

// c_n computed fully in log space. Requires n >= 2.
double slicing_constant(int n);

// ln c_n; preferred for assertions like c_n < 1 at large n.
double log_slicing_constant(int n);

DimensionConstants dimension_constants(int n);

} // namespace slicekit
