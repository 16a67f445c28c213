#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace slicekit {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
void normalize(std::span<double> a); // throws DomainError on zero vector

// Dense symmetric matrices, row-major n*n.
struct SymMatrix {
    int n = 0;
    Vec a; // n*n row-major

    SymMatrix() = default;
    SymMatrix(int n_, double diag = 0.0);

    double& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

SymMatrix identity_matrix(int n);

// x^T M x for unit-cost quadratic forms.
double quad_form(const SymMatrix& m, std::span<const double> x);

void matvec(const SymMatrix& m, std::span<const double> x, std::span<double> out);

// In-place Cholesky M = L L^T. Returns false if not positive definite.
bool cholesky(SymMatrix& m);

// Solve M x = b given the Cholesky factor from cholesky().
void cholesky_solve(const SymMatrix& chol, std::span<const double> b, std::span<double> x);

// log det M from its Cholesky factor.
double cholesky_log_det(const SymMatrix& chol);

// Inverse of an SPD matrix via Cholesky. Throws DomainError if not SPD.
SymMatrix spd_inverse(const SymMatrix& m);

// Eigenvalues of a symmetric matrix by cyclic Jacobi, ascending order.
Vec sym_eigenvalues(const SymMatrix& m);

// Maximum |M_ij - M_ji| — symmetry defect of a row-major square matrix.
double symmetry_defect(std::span<const double> a, int n);

// Deterministic random orthogonal matrix (row-major), from Gram-Schmidt on
// counter-based Gaussian columns. Used for rotation-invariance checks.
Vec random_rotation(int n, std::uint64_t seed);

// y = R x for a row-major n*n matrix R.
void apply_matrix(std::span<const double> r, int n, std::span<const double> x, std::span<double> y);

// y = R^T x.
void apply_matrix_transpose(std::span<const double> r, int n, std::span<const double> x,
                            std::span<double> y);

} // namespace slicekit
