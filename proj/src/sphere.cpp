#include "slicekit/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "slicekit/errors.hpp"
#include "slicekit/gridcache.hpp"
#include "slicekit/parallel.hpp"
#include "slicekit/rng.hpp"
#include "slicekit/scalars.hpp"

namespace slicekit {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr std::size_t kMaxHalfNodes = std::size_t{1} << 24;
} // namespace

Direction make_direction(Vec v) {
    normalize(v);
    return Direction{std::move(v)};
}

Direction checked_direction(Vec v) {
    const double n = norm2(v);
    if (std::abs(n - 1.0) > 1e-12)
        throw DomainError("direction is not unit length (|v| = " + std::to_string(n) + ")");
    return Direction{std::move(v)};
}

Frame orthonormal_frame(const Direction& xi) {
    const int n = xi.dim();
    if (n < 2) throw DomainError("orthonormal_frame: dimension must be >= 2");
    const double nrm = norm2(xi.x);
    if (std::abs(nrm - 1.0) > 1e-12) throw DomainError("orthonormal_frame: non-unit axis");

    // v = xi + sign(xi_1) e_1 never cancels; |v|^2 = 2(1 + |xi_1|).
    const double s = xi.x[0] >= 0.0 ? 1.0 : -1.0;
    Vec v = xi.x;
    v[0] += s;
    const double vv = dot(v, v);

    Frame fr;
    fr.axis = xi;
    fr.basis.reserve(n - 1);
    for (int j = 1; j < n; ++j) {
        Vec col(n);
        const double scale = 2.0 * v[j] / vv;
        for (int i = 0; i < n; ++i) col[i] = (i == j ? 1.0 : 0.0) - scale * v[i];
        fr.basis.push_back(std::move(col));
    }
    return fr;
}

std::string scheme_name(Scheme s) { return s == Scheme::ProductGauss ? "gauss" : "mc"; }

Scheme scheme_from_name(const std::string& name) {
    if (name == "gauss" || name == "product-gauss") return Scheme::ProductGauss;
    if (name == "mc" || name == "monte-carlo") return Scheme::MonteCarlo;
    throw DataError("unknown scheme '" + name + "' (expected gauss or mc)");
}

double SphereGrid::total_weight() const {
    KahanSum s;
    for (double w : weights) s.add(w);
    return s.value();
}

void gauss_legendre(int m, Vec& nodes, Vec& weights) {
    if (m < 1) throw DomainError("gauss_legendre: need at least one node");
    nodes.assign(m, 0.0);
    weights.assign(m, 0.0);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double r = std::cos(kPi * (4 * i + 3) / (4 * m + 2));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre recurrence for P_m(r) and P'_m(r)
            double p0 = 0.0, p1 = 1.0;
            for (int j = 0; j < m; ++j) {
                const double p2 = p0;
                p0 = p1;
                p1 = ((2 * j + 1) * r * p0 - j * p2) / (j + 1);
            }
            dp = m * (r * p1 - p0) / (r * r - 1.0);
            const double step = p1 / dp;
            r -= step;
            if (std::abs(step) < 1e-15 * (1.0 + std::abs(r))) break;
        }
        nodes[m - 1 - i] = r;
        nodes[i] = -r;
        const double w = 2.0 / ((1.0 - r * r) * dp * dp);
        weights[i] = weights[m - 1 - i] = w;
    }
    // odd m: center node is exactly 0
    if (m % 2 == 1) nodes[m / 2] = 0.0;
}

namespace {

// Tensor-product rule over spherical angles, half the azimuth circle only;
// the caller completes antipodal pairs by exact negation.
void build_product_gauss_half(int n, int level, Vec& nodes, Vec& weights) {
    const int polarCount = n - 2;
    std::size_t half = level;
    for (int k = 0; k < polarCount; ++k) {
        half *= static_cast<std::size_t>(level);
        if (half > kMaxHalfNodes)
            throw CapabilityError("product-gauss grid too large at this level; use scheme mc");
    }

    Vec glx, glw;
    gauss_legendre(level, glx, glw);

    // per polar slot k (exponent m = n-1-(k+1)): angle, cos, sin, weight incl. Jacobian
    std::vector<Vec> pc(polarCount), ps(polarCount), pw(polarCount);
    for (int k = 0; k < polarCount; ++k) {
        const int m = n - 2 - k;
        pc[k].resize(level);
        ps[k].resize(level);
        pw[k].resize(level);
        for (int i = 0; i < level; ++i) {
            const double phi = (glx[i] + 1.0) * (kPi / 2.0);
            pc[k][i] = std::cos(phi);
            ps[k][i] = std::sin(phi);
            pw[k][i] = glw[i] * (kPi / 2.0) * std::pow(ps[k][i], m);
        }
    }

    Vec az_c(level), az_s(level);
    const double az_w = kPi / level;
    for (int j = 0; j < level; ++j) {
        const double phi = (j + 0.5) * kPi / level;
        az_c[j] = std::cos(phi);
        az_s[j] = std::sin(phi);
    }

    nodes.assign(half * static_cast<std::size_t>(n), 0.0);
    weights.assign(half, 0.0);

    std::vector<int> idx(polarCount, 0);
    Vec x(n);
    for (std::size_t rec = 0; rec < half; ++rec) {
        // mixed-radix decode: fastest index is the azimuth
        std::size_t t = rec;
        const int j = static_cast<int>(t % level);
        t /= level;
        for (int k = polarCount - 1; k >= 0; --k) {
            idx[k] = static_cast<int>(t % level);
            t /= level;
        }

        double sinChain = 1.0;
        double w = az_w;
        for (int k = 0; k < polarCount; ++k) {
            const int i = idx[k];
            x[k] = sinChain * pc[k][i];
            sinChain *= ps[k][i];
            w *= pw[k][i];
        }
        x[n - 2] = sinChain * az_c[j];
        x[n - 1] = sinChain * az_s[j];

        std::copy(x.begin(), x.end(), nodes.begin() + rec * static_cast<std::size_t>(n));
        weights[rec] = w;
    }
}

void build_monte_carlo_half(int n, int level, std::uint64_t seed, Vec& nodes, Vec& weights) {
    const std::size_t half = static_cast<std::size_t>(256) * level;
    const double w = sphere_area(n) / static_cast<double>(2 * half);
    nodes.assign(half * static_cast<std::size_t>(n), 0.0);
    weights.assign(half, w);

    const CounterRng rng(seed, /*stream=*/1000 + static_cast<std::uint64_t>(n));
    parallel_chunks(half, [&](std::size_t, std::size_t lo, std::size_t hi) {
        Vec g(n);
        for (std::size_t i = lo; i < hi; ++i) {
            for (std::uint64_t attempt = 0;; ++attempt) {
                const std::uint64_t base = (i * 16 + attempt) * static_cast<std::uint64_t>(n);
                double nrm2 = 0.0;
                for (int j = 0; j < n; ++j) {
                    g[j] = rng.normal(base + j);
                    nrm2 += g[j] * g[j];
                }
                if (nrm2 <= 1e-12 && attempt >= 15) {
                    std::fill(g.begin(), g.end(), 0.0);
                    g[0] = 1.0;
                    nrm2 = 1.0;
                }
                if (nrm2 > 1e-12) {
                    const double inv = 1.0 / std::sqrt(nrm2);
                    for (int j = 0; j < n; ++j)
                        nodes[i * static_cast<std::size_t>(n) + j] = g[j] * inv;
                    break;
                }
            }
        }
    });
}

SphereGrid complete_antipodal(int n, int intrinsicDim, int level, Scheme scheme,
                              std::uint64_t seed, const Vec& halfNodes, const Vec& halfWeights) {
    SphereGrid g;
    g.ambientDim = n;
    g.intrinsicDim = intrinsicDim;
    g.level = level;
    g.scheme = scheme;
    g.seed = seed;
    const std::size_t half = halfWeights.size();
    g.nodes.resize(2 * half * static_cast<std::size_t>(n));
    g.weights.resize(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
        for (int j = 0; j < n; ++j) {
            const double v = halfNodes[i * static_cast<std::size_t>(n) + j];
            g.nodes[(2 * i) * static_cast<std::size_t>(n) + j] = v;
            g.nodes[(2 * i + 1) * static_cast<std::size_t>(n) + j] = -v;
        }
        g.weights[2 * i] = halfWeights[i];
        g.weights[2 * i + 1] = halfWeights[i];
    }
    return g;
}

} // namespace

SphereGrid sphere_grid(int n, int level, Scheme scheme, std::uint64_t seed) {
    if (n < 2) throw DomainError("sphere_grid: dimension must be >= 2");
    if (level < 4) throw DomainError("sphere_grid: level must be >= 4");

    Vec halfNodes, halfWeights;
    if (scheme == Scheme::ProductGauss) {
        if (n > 6)
            throw CapabilityError(
                "product-gauss is limited to n <= 6 (node count grows as level^(n-1)); "
                "use scheme mc");
        build_product_gauss_half(n, level, halfNodes, halfWeights);
    } else {
        build_monte_carlo_half(n, level, seed, halfNodes, halfWeights);
    }
    return complete_antipodal(n, n - 1, level, scheme, seed, halfNodes, halfWeights);
}

std::shared_ptr<const SphereGrid> sphere_grid_cached(int n, int level, Scheme scheme,
                                                     std::uint64_t seed) {
    using Key = std::tuple<int, int, int, std::uint64_t>;
    static std::map<Key, std::shared_ptr<const SphereGrid>> memo;
    static std::mutex mu;

    const Key key{n, level, static_cast<int>(scheme), seed};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    std::shared_ptr<const SphereGrid> grid;
    if (auto fromDisk = load_cached_grid(n, level, scheme, seed))
        grid = std::make_shared<const SphereGrid>(std::move(*fromDisk));
    else {
        grid = std::make_shared<const SphereGrid>(sphere_grid(n, level, scheme, seed));
        store_cached_grid(*grid);
    }

    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = memo.emplace(key, grid);
    return it->second;
}

SphereGrid subsphere_grid(const Direction& xi, int level, Scheme scheme, std::uint64_t seed) {
    const int n = xi.dim();
    if (n < 2) throw DomainError("subsphere_grid: ambient dimension must be >= 2");
    const Frame fr = orthonormal_frame(xi);

    SphereGrid g;
    g.ambientDim = n;
    g.intrinsicDim = n - 2;
    g.level = level;
    g.scheme = scheme;
    g.seed = seed;

    if (n == 2) {
        // S^0: two points, counting measure
        g.nodes.resize(2 * static_cast<std::size_t>(n));
        g.weights.assign(2, 1.0);
        for (int j = 0; j < n; ++j) {
            g.nodes[j] = fr.basis[0][j];
            g.nodes[static_cast<std::size_t>(n) + j] = -fr.basis[0][j];
        }
        return g;
    }

    const auto base = sphere_grid_cached(n - 1, level, scheme, seed);
    const std::size_t count = base->size();
    g.nodes.assign(count * static_cast<std::size_t>(n), 0.0);
    g.weights = base->weights;

    parallel_chunks(count, [&](std::size_t, std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) {
            const auto y = base->node(i);
            double* out = g.nodes.data() + i * static_cast<std::size_t>(n);
            for (int c = 0; c < n; ++c) {
                double s = 0.0;
                for (int j = 0; j < n - 1; ++j) s += y[j] * fr.basis[j][c];
                out[c] = s;
            }
        }
    });
    return g;
}

double integrate(const SphereGrid& grid,
                 const std::function<double(std::span<const double>)>& f) {
    return parallel_sum(grid.size(), [&](std::size_t i) {
        return grid.weights[i] * f(grid.node(i));
    });
}

} // namespace slicekit
