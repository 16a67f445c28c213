#include "slicekit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "slicekit/errors.hpp"
#include "slicekit/rng.hpp"

namespace slicekit {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

void normalize(std::span<double> a) {
    const double n = norm2(a);
    if (!(n > 0.0)) throw DomainError("cannot normalize a zero vector");
    for (double& x : a) x /= n;
}

SymMatrix::SymMatrix(int n_, double diag) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {
    for (int i = 0; i < n; ++i) at(i, i) = diag;
}

SymMatrix identity_matrix(int n) { return SymMatrix(n, 1.0); }

double quad_form(const SymMatrix& m, std::span<const double> x) {
    double s = 0.0;
    for (int i = 0; i < m.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < m.n; ++j) row += m.at(i, j) * x[j];
        s += x[i] * row;
    }
    return s;
}

void matvec(const SymMatrix& m, std::span<const double> x, std::span<double> out) {
    for (int i = 0; i < m.n; ++i) {
        double s = 0.0;
        for (int j = 0; j < m.n; ++j) s += m.at(i, j) * x[j];
        out[i] = s;
    }
}

bool cholesky(SymMatrix& m) {
    const int n = m.n;
    for (int j = 0; j < n; ++j) {
        double d = m.at(j, j);
        for (int k = 0; k < j; ++k) d -= m.at(j, k) * m.at(j, k);
        if (!(d > 0.0)) return false;
        const double ljj = std::sqrt(d);
        m.at(j, j) = ljj;
        for (int i = j + 1; i < n; ++i) {
            double s = m.at(i, j);
            for (int k = 0; k < j; ++k) s -= m.at(i, k) * m.at(j, k);
            m.at(i, j) = s / ljj;
        }
        for (int i = 0; i < j; ++i) m.at(i, j) = 0.0;
    }
    return true;
}

void cholesky_solve(const SymMatrix& chol, std::span<const double> b, std::span<double> x) {
    const int n = chol.n;
    // forward L y = b
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= chol.at(i, k) * x[k];
        x[i] = s / chol.at(i, i);
    }
    // backward L^T x = y
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int k = i + 1; k < n; ++k) s -= chol.at(k, i) * x[k];
        x[i] = s / chol.at(i, i);
    }
}

double cholesky_log_det(const SymMatrix& chol) {
    double s = 0.0;
    for (int i = 0; i < chol.n; ++i) s += std::log(chol.at(i, i));
    return 2.0 * s;
}

SymMatrix spd_inverse(const SymMatrix& m) {
    SymMatrix chol = m;
    if (!cholesky(chol)) throw DomainError("matrix is not positive definite");
    const int n = m.n;
    SymMatrix inv(n);
    Vec e(n, 0.0), col(n, 0.0);
    for (int j = 0; j < n; ++j) {
        std::fill(e.begin(), e.end(), 0.0);
        e[j] = 1.0;
        cholesky_solve(chol, e, col);
        for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
    }
    // symmetrize round-off
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (inv.at(i, j) + inv.at(j, i));
            inv.at(i, j) = inv.at(j, i) = v;
        }
    return inv;
}

Vec sym_eigenvalues(const SymMatrix& m) {
    SymMatrix a = m;
    const int n = a.n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a.at(i, j) * a.at(i, j);
        if (off < 1e-30) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a.at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                const double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    Vec ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a.at(i, i);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double symmetry_defect(std::span<const double> a, int n) {
    double d = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            d = std::max(d, std::abs(a[static_cast<std::size_t>(i) * n + j] -
                                     a[static_cast<std::size_t>(j) * n + i]));
    return d;
}

Vec random_rotation(int n, std::uint64_t seed) {
    CounterRng rng(seed, /*stream=*/7);
    Vec q(static_cast<std::size_t>(n) * n);
    // columns = Gram-Schmidt of Gaussian vectors
    for (int j = 0; j < n; ++j) {
        Vec v(n);
        for (int i = 0; i < n; ++i)
            v[i] = rng.normal(static_cast<std::uint64_t>(j) * n + i);
        for (int k = 0; k < j; ++k) {
            double proj = 0.0;
            for (int i = 0; i < n; ++i) proj += v[i] * q[static_cast<std::size_t>(i) * n + k];
            for (int i = 0; i < n; ++i) v[i] -= proj * q[static_cast<std::size_t>(i) * n + k];
        }
        normalize(v);
        for (int i = 0; i < n; ++i) q[static_cast<std::size_t>(i) * n + j] = v[i];
    }
    return q;
}

void apply_matrix(std::span<const double> r, int n, std::span<const double> x,
                  std::span<double> y) {
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += r[static_cast<std::size_t>(i) * n + j] * x[j];
        y[i] = s;
    }
}

void apply_matrix_transpose(std::span<const double> r, int n, std::span<const double> x,
                            std::span<double> y) {
    for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += r[static_cast<std::size_t>(j) * n + i] * x[j];
        y[i] = s;
    }
}

} // namespace slicekit
