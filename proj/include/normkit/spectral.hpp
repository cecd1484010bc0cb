#pragma once

#include "normkit/core.hpp"
#include "normkit/toeplitz.hpp"

#include <random>
#include <vector>

namespace normkit {

struct NormalEigenDecomposition {
    CMatrix u;       // unitary, columns are eigenvectors
    CVector lambda;  // sorted lexicographically by (re, im)
};

/// An affine line y + rho*theta in C and the eigenvalues of a decomposition
/// lying on it. For member j of the decomposition, lambda_j = y + rho_j*theta.
struct EigenLine {
    Complex y;
    Unimodular theta;  // canonical representative
    std::vector<Index> member_indices;
    RVector rho;

    Index p() const { return static_cast<Index>(member_indices.size()); }
};

struct SimDiag {
    CMatrix w;  // unitary, diagonalizes both inputs
    CVector lambda_a;
    CVector lambda_e;
};

/// Eigendecomposition of a normal matrix via the commuting Hermitian pair
/// (theta-Hermitian part, theta-skew-Hermitian part): diagonalize the first,
/// then refine each eigenvalue cluster with the second.
NormalEigenDecomposition normal_eig(const CMatrix& a, const Tolerance& tol = {});

/// One unitary diagonalizing two commuting normal matrices.
SimDiag simultaneous_diag(const CMatrix& a, const CMatrix& e, const Tolerance& tol = {});

/// All eigenvalues of the decomposition lying on the line y + rho*theta.
EigenLine group_on_line(const NormalEigenDecomposition& dec, Complex y, const Unimodular& theta,
                        const Tolerance& tol = {});

/// A direction theta whose real projection separates every pair of distinct
/// eigenvalues: |Re(conj(theta)(l_p - l_q))| >= sep*|l_p - l_q|.
Unimodular feasible_theta(const CVector& lambda, std::mt19937_64& rng, double sep = 1e-3);

bool theta_separates(const CVector& lambda, const Unimodular& theta, double sep = 1e-3);

}  // namespace normkit
