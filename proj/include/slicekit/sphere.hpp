#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "slicekit/linalg.hpp"

namespace slicekit {

// Unit vector on S^{n-1}.
struct Direction {
    Vec x;

    int dim() const { return static_cast<int>(x.size()); }
    std::span<const double> coords() const { return x; }
};

// Normalizes v; throws DomainError on the zero vector.
Direction make_direction(Vec v);

// Requires |v| = 1 within 1e-12; throws DomainError otherwise.
Direction checked_direction(Vec v);

// Orthonormal basis of xi^perp, deterministic in the input bits.
struct Frame {
    Direction axis;
    std::vector<Vec> basis; // n-1 vectors of length n
};

// Householder reflector carrying e_1 to +-xi; columns 2..n form the basis.
Frame orthonormal_frame(const Direction& xi);

enum class Scheme { ProductGauss, MonteCarlo };

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string& name); // "gauss" | "mc"

// Quadrature rule on S^{n-1} or on a great subsphere S^{n-1} cap xi^perp.
// Immutable after construction; nodes come in exact antipodal pairs
// (node 2i+1 = -node 2i) with equal weights.
struct SphereGrid {
    int ambientDim = 0;
    int intrinsicDim = 0; // n-1 full sphere, n-2 subsphere
    int level = 0;
    Scheme scheme = Scheme::ProductGauss;
    std::uint64_t seed = 0;
    Vec nodes;   // size() * ambientDim, row-major
    Vec weights; // size()

    std::size_t size() const { return weights.size(); }
    std::span<const double> node(std::size_t i) const {
        return {nodes.data() + i * static_cast<std::size_t>(ambientDim),
                static_cast<std::size_t>(ambientDim)};
    }
    double total_weight() const;
};

// Full-sphere rule. ProductGauss tensorizes Gauss-Legendre in the spherical
// angles (Jacobian folded into the weights) and is limited to n <= 6; node
// count is 2*level^(n-1). MonteCarlo uses counter-seeded normalized Gaussian
// samples, symmetrized, with equal weights |S^{n-1}|/N and N = 512*level.
SphereGrid sphere_grid(int n, int level, Scheme scheme, std::uint64_t seed = 0);

// Shared immutable grid, memoized on (n, level, scheme, seed). Also consults
// the on-disk cache when SLICEKIT_CACHE_DIR is set.
std::shared_ptr<const SphereGrid> sphere_grid_cached(int n, int level, Scheme scheme,
                                                     std::uint64_t seed = 0);

// Rule on S^{n-1} cap xi^perp with total weight |S^{n-2}|: an (n-2)-sphere
// grid built in frame coordinates and mapped through the frame. For n = 2 the
// subsphere is the two points +-b with counting weights 1 each.
SphereGrid subsphere_grid(const Direction& xi, int level, Scheme scheme, std::uint64_t seed = 0);

// Weighted sum of f over the grid; deterministic chunked compensated
// summation, reproducible for any thread count.
double integrate(const SphereGrid& grid,
                 const std::function<double(std::span<const double>)>& f);

// Gauss-Legendre nodes and weights on [-1, 1], Newton on the recurrence.
void gauss_legendre(int m, Vec& nodes, Vec& weights);

} // namespace slicekit
