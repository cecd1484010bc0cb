#pragma once

#include "normkit/spectral.hpp"

#include <random>

namespace normkit {

/// Real polynomial in monomial form, coeffs(k) multiplying x^k.
struct RealPolynomial {
    RVector coeffs;  // ascending degree; empty means the zero polynomial

    Index degree() const { return coeffs.size() == 0 ? 0 : coeffs.size() - 1; }
    double eval(double x) const;
    /// Horner evaluation at a Hermitian matrix argument.
    CMatrix eval(const CMatrix& h) const;
    /// Drop trailing coefficients below 1e-10 * max|coeff|.
    RealPolynomial trimmed() const;
};

/// The curve rho -> theta*rho + i*theta*pi(rho).
struct PolyCurve {
    Unimodular theta;
    RealPolynomial pi;
};

enum class CurveRegion { OnCurve, ConvexSide, OtherSide };

/// Interpolating polynomial through (Re(conj(theta) l_j), Im(conj(theta) l_j)).
/// Requires theta to separate distinct eigenvalues.
RealPolynomial lagrange_pi(const NormalEigenDecomposition& dec, const Unimodular& theta);

/// Same polynomial computed without eigenvalues: Lanczos three-term recursion
/// on the Hermitian part of conj(theta)A and a least-squares solve in the
/// Krylov basis, cross-validated on an independent random vector.
RealPolynomial krylov_pi(const CMatrix& a, const Unimodular& theta, const CVector& v,
                         std::mt19937_64& rng, double tol = 1e-9);

Complex curve_eval(const PolyCurve& c, double rho);

/// Partition of the plane by a quadratic curve with positive leading
/// coefficient. ConvexSide is the open region the parabola bends around.
CurveRegion classify_point(const PolyCurve& c, Complex z, double tol = 1e-9);

/// Signed vertical offset of z from the curve in the theta-rotated plane.
double curve_offset(const PolyCurve& c, Complex z);

/// Newton divided-difference interpolation through (x_i, y_i), monomial output.
RealPolynomial newton_interpolate(const RVector& x, const RVector& y);

}  // namespace normkit
