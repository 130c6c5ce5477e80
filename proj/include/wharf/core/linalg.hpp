#pragma once

#include <vector>

#include "wharf/core/matrix.hpp"

namespace wharf {

inline constexpr double kStructTol = 1e-10;   // structural identities
inline constexpr double kClusterTol = 1e-8;   // eigenvalue clustering

CMatrix matmul(const CMatrix& a, const CMatrix& b);
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Trace over the complement of `keep` (site indices into site_dims).
CMatrix partial_trace(const CMatrix& m, const std::vector<std::size_t>& site_dims,
                      const std::vector<std::size_t>& keep);

/// Eigen-decomposition of a Hermitian matrix (LAPACK zheevd).
/// want_vectors=false skips the (expensive) eigenvector computation.
EigReport hermitian_eig(const CMatrix& m, bool want_vectors = true, double herm_tol = kStructTol);

bool is_psd(const CMatrix& m, double tol, double herm_tol = kStructTol);
double min_eigenvalue(const CMatrix& m, double herm_tol = kStructTol);

/// (1/2)||a-b||_1 for Hermitian a, b.
double trace_distance(const CMatrix& a, const CMatrix& b);

struct LstsqResult {
    CMatrix solution;
    double residual = 0.0;   // max-abs of A x - b
};

/// Least-squares solve of a X = b (zgelsd).
LstsqResult solve_linear(const CMatrix& a, const CMatrix& b);

/// Orthonormal basis (rows) of the null space of `a`.
std::vector<Vec> null_space(const CMatrix& a, double tol = kStructTol);

/// Coefficients c with sum_i c_i rep[i] = target; throws when the residual
/// exceeds tol ("element not in algebra image").
Vec pullback(const std::vector<CMatrix>& rep, const CMatrix& target, double tol = 1e-9);

CMatrix psd_sqrt(const CMatrix& m, double tol = kStructTol);
CMatrix psd_inverse(const CMatrix& m, double tol = kStructTol);

}  // namespace wharf
