#include "normkit/core.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace normkit {

CMatrix commutator(const CMatrix& a, const CMatrix& b) {
    require_square(a, "commutator");
    require_square(b, "commutator");
    if (a.rows() != b.rows()) throw ShapeError("commutator: dimension mismatch");
    return a * b - b * a;
}

double normality_defect(const CMatrix& a) {
    require_square(a, "normality_defect");
    const double nrm2 = a.squaredNorm();
    return commutator(a, a.adjoint()).norm() / std::max(1.0, nrm2);
}

bool is_normal(const CMatrix& a, const Tolerance& tol) {
    return normality_defect(a) <= tol.rel_normality;
}

HermitianEig hermitian_eig(const CMatrix& h, const Tolerance& tol) {
    require_square(h, "hermitian_eig");
    const double scale = std::max(1.0, h.norm());
    if ((h - h.adjoint()).norm() > 1e-10 * scale)
        throw PreconditionError("hermitian_eig: input is not Hermitian");
    Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
    if (es.info() != Eigen::Success)
        throw NumericalError("hermitian_eig: solver did not converge");
    HermitianEig out{es.eigenvectors(), es.eigenvalues()};
    const double resid = (h * out.q - out.q * out.d.asDiagonal().toDenseMatrix().cast<Complex>()).norm();
    if (resid > tol.eig_residual * scale)
        throw NumericalError("hermitian_eig: residual " + std::to_string(resid) + " above tolerance");
    return out;
}

CMatrix random_unitary(Index n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    CMatrix g(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    // fix phases so the diagonal of R is positive; makes Q unique given G
    CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < n; ++j) {
        Complex rjj = r(j, j);
        if (std::abs(rjj) > 0) q.col(j) *= rjj / std::abs(rjj);
    }
    return q;
}

CMatrix random_normal(Index n, std::mt19937_64& rng) {
    if (n < 1) throw ShapeError("random_normal: n must be >= 1");
    std::uniform_real_distribution<double> unif(-2.0, 2.0);
    CVector lambda(n);
    for (Index i = 0; i < n; ++i) lambda(i) = Complex(unif(rng), unif(rng));
    CMatrix u = random_unitary(n, rng);
    return u * lambda.asDiagonal() * u.adjoint();
}

}  // namespace normkit
