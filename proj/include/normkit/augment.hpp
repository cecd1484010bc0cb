#pragma once

#include "normkit/curve.hpp"
#include "normkit/perturb.hpp"

namespace normkit {

/// Border data of a normality preserving 1-augmentation [[A, v],[w*, y]].
struct Augmentation1 {
    Complex y;
    Unimodular theta;
    CVector u;
    CVector v;  // theta * u
    CVector w;  // conj(theta) * u
};

/// Quadratic-curve m-augmentation A_+ = theta*H + i*theta*pi(H) with
/// H = [[conj(theta)*Theta(A), Z],[Z*, M]].
struct QuadAugmentation {
    PolyCurve curve;
    CMatrix z;        // scaled coupling block, n x m (already divided by sqrt(r_2))
    CMatrix m_block;  // Hermitian m x m
    CMatrix q_block;  // unitary m x m
    CMatrix a_plus;   // (n+m) x (n+m)
};

/// Border A with v = theta*u, w = conj(theta)*u where u is a combination of
/// the eigenvectors on the line through y with slope theta.
std::pair<Augmentation1, CMatrix> augment1(const CMatrix& a, const NormalEigenDecomposition& dec,
                                           const EigenLine& line, const CVector& coeffs,
                                           const Tolerance& tol = {});

/// Inherited (off-line) eigenvalues plus the p+1 eigenvalues of the bordered
/// block theta*[[R, r],[r*, 0]] + y*I, with a Cauchy interlacing certificate.
SpectrumPrediction predict_augment1_spectrum(const CMatrix& a, const NormalEigenDecomposition& dec,
                                             const EigenLine& line, const CVector& coeffs,
                                             const Tolerance& tol = {});

/// p-augmentation pushing the eigenvalues of A inside the convex side of a
/// quadratic curve onto the curve; m_block (Hermitian) and q_block (unitary)
/// parametrize the family.
QuadAugmentation quad_augment(const CMatrix& a, const PolyCurve& curve, const CMatrix& m_block,
                              const CMatrix& q_block, const Tolerance& tol = {});

/// Augmentation along a quadratic minorant of the spectral polynomial of A,
/// computed without eigenvalues of A: factor (pi - minorant)(conj(theta)Theta(A))
/// = Z Z* and augment along (theta, minorant).
QuadAugmentation eigfree_augment(const CMatrix& a, const Unimodular& theta,
                                 const RealPolynomial& minorant, const Tolerance& tol = {});

}  // namespace normkit
