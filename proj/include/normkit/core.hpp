#pragma once

#include "normkit/types.hpp"

#include <random>

namespace normkit {

/// [A,B] = AB - BA.
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// ||[A,A*]||_F / max(1, ||A||_F^2). Zero exactly for normal A, scale invariant.
double normality_defect(const CMatrix& a);

bool is_normal(const CMatrix& a, const Tolerance& tol = {});

struct HermitianEig {
    CMatrix q;  // unitary, columns are eigenvectors
    RVector d;  // ascending eigenvalues
};

/// Spectral decomposition H = Q diag(d) Q* of a Hermitian matrix.
/// Throws PreconditionError if H is not Hermitian to tolerance.
HermitianEig hermitian_eig(const CMatrix& h, const Tolerance& tol = {});

/// Seeded random unitary matrix (Q factor of a complex Gaussian matrix).
CMatrix random_unitary(Index n, std::mt19937_64& rng);

/// U Lambda U* with random unitary U and random complex diagonal Lambda.
CMatrix random_normal(Index n, std::mt19937_64& rng);

}  // namespace normkit
