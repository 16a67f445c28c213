#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "slicekit/linalg.hpp"
#include "slicekit/sphere.hpp"

namespace slicekit {

// Halfspace {x : <normal, x> <= offset}, offset > 0 (origin interior).
struct Facet {
    Vec normal;
    double offset = 1.0;
};

// Origin-symmetric star body given by its radial function rho on S^{n-1}.
// rho(theta) > 0, rho(theta) = rho(-theta); the Minkowski functional is
// |x| / rho(x/|x|).
struct StarBody {
    enum class Tag { Ball, LpBall, Cube, CrossPolytope, Ellipsoid, HPolytope, Tabulated, Derived };

    int dim = 0;
    Tag tag = Tag::Derived;
    std::string label;
    std::function<double(std::span<const double>)> radial;

    double param = 0.0;        // Ball: radius; LpBall: p; Cube: halfwidth
    SymMatrix matrix;          // Ellipsoid: {x : x^T M x <= 1}
    std::vector<Facet> facets; // HPolytope
    double outerRadius = 0.0;  // exact max rho when known, 0 when unknown

    double rho(std::span<const double> unitDir) const { return radial(unitDir); }
    bool convex_tag() const;
};

StarBody make_ball(int n, double radius = 1.0);
StarBody make_lp_ball(int n, double p);
StarBody make_cube(int n, double halfwidth);
StarBody make_cross_polytope(int n);
StarBody make_ellipsoid(SymMatrix m);

// Requires a symmetric facet list: for every (a, b) the facet (-a, b) must be
// present (1e-12 tolerance), offsets positive, and the normals must span R^n
// (boundedness).
StarBody make_h_polytope(int n, std::vector<Facet> facets);

// Samples src on a structured table and interpolates: piecewise linear in
// spherical angles for n <= 3, nearest-neighbor averaging for n >= 4.
// Queries are sign-canonicalized, so evenness is exact.
StarBody make_tabulated(const StarBody& src, int resolution);

// Symmetric random polytope: box facets at +-halfwidth plus `extra` seeded
// random halfspace pairs. Bounded by construction.
StarBody make_random_h_polytope(int n, int extra, std::uint64_t seed, double halfwidth = 1.0);

StarBody scale_body(const StarBody& body, double t);

// rho'(theta) = rho(R^T theta) for an orthogonal row-major R. Facet-based and
// quadratic tags stay exactly representable; others become Derived.
StarBody rotate_body(const StarBody& body, Vec rotation);

// Gauge ||x||_K = min{a >= 0 : x in aK}; 0 at the origin, 1-homogeneous.
double minkowski_functional(const StarBody& body, std::span<const double> x);

// |K| = (1/n) sum w_i rho(theta_i)^n over a full-sphere grid.
double body_volume(const StarBody& body, const SphereGrid& grid);

// Star body whose radius at xi is |L cap xi^perp|, evaluated on demand via a
// level-`level` subsphere rule and memoized per quantized direction.
StarBody intersection_body_of(const StarBody& L, int level,
                              Scheme scheme = Scheme::ProductGauss, std::uint64_t seed = 0);

// Sampled sanity checks: positivity, evenness within 1e-10, bounded max/min
// ratio. Throws DataError naming the first violated property.
void validate_star_body(const StarBody& body, int samples = 256, std::uint64_t seed = 11);

} // namespace slicekit
