#include "normkit/augment.hpp"

#include <cmath>

namespace normkit {

namespace {

void require_normal(const CMatrix& a, const Tolerance& tol, const char* who) {
    const double defect = normality_defect(a);
    if (defect > tol.rel_normality)
        throw PreconditionError(std::string(who) + ": input not normal, defect " +
                                std::to_string(defect));
}

CMatrix assemble_quad(const CMatrix& x, const CMatrix& zhat, const CMatrix& m,
                      const Unimodular& theta, const RealPolynomial& pi) {
    const Index n = x.rows(), k = m.rows();
    CMatrix h(n + k, n + k);
    h.topLeftCorner(n, n) = x;
    h.topRightCorner(n, k) = zhat;
    h.bottomLeftCorner(k, n) = zhat.adjoint();
    h.bottomRightCorner(k, k) = m;
    return theta.value() * h + Complex(0, 1) * theta.value() * pi.eval(h);
}

void verify_quad(const CMatrix& a, const PolyCurve& curve, const CMatrix& aplus,
                 const Tolerance& tol) {
    const Index n = a.rows();
    const double scale = std::max(1.0, a.norm());
    if ((aplus.topLeftCorner(n, n) - a).norm() > 1e-9 * scale)
        throw NumericalError("quad augmentation: leading principal block drifted from A");
    const double defect = normality_defect(aplus);
    if (defect > tol.rel_normality)
        throw NumericalError("quad augmentation: result not normal, defect " +
                             std::to_string(defect));
    const CVector lam = normal_eig(aplus, tol).lambda;
    for (Index j = 0; j < lam.size(); ++j) {
        const double off = std::abs(curve_offset(curve, lam(j)));
        if (off > 1e-8 * (1.0 + std::abs(lam(j))))
            throw NumericalError("quad augmentation: eigenvalue left the curve by " +
                                 std::to_string(off));
    }
}

}  // namespace

std::pair<Augmentation1, CMatrix> augment1(const CMatrix& a, const NormalEigenDecomposition& dec,
                                           const EigenLine& line, const CVector& coeffs,
                                           const Tolerance& tol) {
    require_square(a, "augment1");
    require_normal(a, tol, "augment1");
    if (coeffs.size() != line.p())
        throw ShapeError("augment1: coefficient count must equal line membership count");

    const Index n = a.rows();
    CVector u = CVector::Zero(n);
    for (Index j = 0; j < coeffs.size(); ++j) u += coeffs(j) * dec.u.col(line.member_indices[j]);

    Augmentation1 aug;
    aug.y = line.y;
    aug.theta = line.theta.canonical();
    aug.u = u;
    aug.v = aug.theta.value() * u;
    aug.w = aug.theta.conj() * u;

    CMatrix aplus(n + 1, n + 1);
    aplus.topLeftCorner(n, n) = a;
    aplus.topRightCorner(n, 1) = aug.v;
    aplus.bottomLeftCorner(1, n) = aug.w.adjoint();
    aplus(n, n) = aug.y;
    return {std::move(aug), std::move(aplus)};
}

SpectrumPrediction predict_augment1_spectrum(const CMatrix& a,
                                             const NormalEigenDecomposition& dec,
                                             const EigenLine& line, const CVector& coeffs,
                                             const Tolerance& tol) {
    require_square(a, "predict_augment1_spectrum");
    if (coeffs.size() != line.p())
        throw ShapeError("predict_augment1_spectrum: coefficient count mismatch");
    SpectrumPrediction out;
    out.line = line;
    const Index p = line.p();

    std::vector<bool> member(dec.lambda.size(), false);
    for (Index idx : line.member_indices) member[idx] = true;
    for (Index j = 0; j < dec.lambda.size(); ++j)
        if (!member[j]) out.inherited.emplace_back(j, dec.lambda(j));

    out.perturbed_old.resize(p);
    for (Index j = 0; j < p; ++j) out.perturbed_old(j) = dec.lambda(line.member_indices[j]);

    // bordered Hermitian block R_+ = [[R, r],[r*, 0]] on the line coordinate
    CMatrix rplus = CMatrix::Zero(p + 1, p + 1);
    for (Index j = 0; j < p; ++j) rplus(j, j) = line.rho(j);
    rplus.topRightCorner(p, 1) = coeffs;
    rplus.bottomLeftCorner(1, p) = coeffs.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rplus);
    const RVector rho_new = es.eigenvalues();

    const Unimodular theta = line.theta.canonical();
    out.perturbed_new.resize(p + 1);
    for (Index j = 0; j <= p; ++j) out.perturbed_new(j) = line.y + theta.value() * rho_new(j);

    RVector sorted_old = line.rho;
    std::sort(sorted_old.data(), sorted_old.data() + p);
    const double slack =
        1e-10 * (1.0 + (p ? sorted_old.cwiseAbs().maxCoeff() : 0.0) + coeffs.norm());
    // Cauchy interlacing: the p eigenvalues of R separate the p+1 of R_+
    out.interlacing_ok = [&] {
        for (Index i = 0; i < p; ++i)
            if (sorted_old(i) < rho_new(i) - slack || sorted_old(i) > rho_new(i + 1) + slack)
                return false;
        return true;
    }();
    (void)tol;
    return out;
}

QuadAugmentation quad_augment(const CMatrix& a, const PolyCurve& curve, const CMatrix& m_block,
                              const CMatrix& q_block, const Tolerance& tol) {
    require_square(a, "quad_augment");
    require_normal(a, tol, "quad_augment");
    if (curve.pi.coeffs.size() != 3 || !(curve.pi.coeffs(2) > 0.0))
        throw PreconditionError("quad_augment: curve must be quadratic with r_2 > 0");
    const double r2 = curve.pi.coeffs(2);

    NormalEigenDecomposition dec = normal_eig(a, tol);
    std::vector<Index> inside;
    for (Index j = 0; j < dec.lambda.size(); ++j) {
        const double off = curve_offset(curve, dec.lambda(j));
        if (off < -tol.collinearity * (1.0 + std::abs(dec.lambda(j))))
            throw InfeasibleError("quad_augment: eigenvalue (" +
                                  std::to_string(dec.lambda(j).real()) + ", " +
                                  std::to_string(dec.lambda(j).imag()) +
                                  ") lies on the non-convex side of the curve");
        if (off > tol.collinearity * (1.0 + std::abs(dec.lambda(j)))) inside.push_back(j);
    }
    const Index p = static_cast<Index>(inside.size());
    if (m_block.rows() != p || m_block.cols() != p || q_block.rows() != p || q_block.cols() != p)
        throw ShapeError("quad_augment: M and Q must be " + std::to_string(p) + "x" +
                         std::to_string(p));
    if (p > 0) {
        if ((m_block - m_block.adjoint()).norm() > 1e-10 * std::max(1.0, m_block.norm()))
            throw PreconditionError("quad_augment: M must be Hermitian");
        if ((q_block.adjoint() * q_block - CMatrix::Identity(p, p)).norm() > 1e-10 * p)
            throw PreconditionError("quad_augment: Q must be unitary");
    }

    const Index n = a.rows();
    CMatrix z(n, p);
    for (Index k = 0; k < p; ++k) {
        const double xi = curve_offset(curve, dec.lambda(inside[k]));
        z.col(k) = std::sqrt(xi) * dec.u.col(inside[k]);
    }
    CMatrix zhat = z * q_block / std::sqrt(r2);

    CMatrix x = theta_part(a, curve.theta) * curve.theta.conj();
    x = 0.5 * (x + x.adjoint().eval());
    QuadAugmentation out;
    out.curve = curve;
    out.z = zhat;
    out.m_block = m_block;
    out.q_block = q_block;
    out.a_plus = assemble_quad(x, zhat, m_block, curve.theta, curve.pi);
    verify_quad(a, curve, out.a_plus, tol);
    return out;
}

QuadAugmentation eigfree_augment(const CMatrix& a, const Unimodular& theta,
                                 const RealPolynomial& minorant, const Tolerance& tol) {
    require_square(a, "eigfree_augment");
    require_normal(a, tol, "eigfree_augment");
    if (minorant.coeffs.size() != 3 || !(minorant.coeffs(2) > 0.0))
        throw PreconditionError("eigfree_augment: minorant must be quadratic with r_2 > 0");
    const double r2 = minorant.coeffs(2);

    std::mt19937_64 rng(0x5851f42d4c957f2dull);
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector v(a.rows());
    for (Index i = 0; i < a.rows(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
    const RealPolynomial pi = krylov_pi(a, theta, v, rng);
    if (pi.degree() % 2 != 0 || pi.degree() < 2)
        throw PreconditionError("eigfree_augment: spectral polynomial has degree " +
                                std::to_string(pi.degree()) + ", need even degree >= 2");

    CMatrix x = theta_part(a, theta) * theta.conj();
    x = 0.5 * (x + x.adjoint().eval());
    HermitianEig ex = hermitian_eig(x, tol);

    // (pi - minorant) evaluated on the spectrum of X must be nonnegative
    const Index n = a.rows();
    const double scale = std::max(1.0, a.norm());
    RVector gap(n);
    for (Index i = 0; i < n; ++i) {
        gap(i) = pi.eval(ex.d(i)) - minorant.eval(ex.d(i));
        if (gap(i) < -1e-12 * scale)
            throw InfeasibleError("eigfree_augment: minorant exceeds the spectral polynomial "
                                  "at abscissa " + std::to_string(ex.d(i)));
    }

    std::vector<Index> keep;
    for (Index i = 0; i < n; ++i)
        if (gap(i) > tol.collinearity) keep.push_back(i);
    const Index m = static_cast<Index>(keep.size());
    CMatrix zhat(n, m);
    for (Index k = 0; k < m; ++k)
        zhat.col(k) = std::sqrt(gap(keep[k]) / r2) * ex.q.col(keep[k]);

    QuadAugmentation out;
    out.curve = PolyCurve{theta, minorant};
    out.z = zhat;
    out.m_block = CMatrix::Zero(m, m);
    out.q_block = CMatrix::Identity(m, m);
    out.a_plus = assemble_quad(x, zhat, out.m_block, theta, minorant);
    verify_quad(a, out.curve, out.a_plus, tol);
    return out;
}

}  // namespace normkit
