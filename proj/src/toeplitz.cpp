#include "normkit/toeplitz.hpp"

#include "normkit/core.hpp"
#include "normkit/spectral.hpp"

#include <cmath>

namespace normkit {

Unimodular::Unimodular(Complex z) {
    const double m = std::abs(z);
    if (!(m > 0.0) || !std::isfinite(m))
        throw PreconditionError("Unimodular: cannot normalize zero or non-finite value");
    value_ = z / m;
}

Unimodular Unimodular::canonical() const {
    // arg in [0, pi): flip the lower half plane and -1 itself
    if (value_.imag() < 0.0 || (value_.imag() == 0.0 && value_.real() < 0.0))
        return Unimodular(-value_);
    return *this;
}

std::pair<Complex, Complex> theta_split_scalar(Complex z, const Unimodular& theta) {
    const Complex tz = theta.conj() * z;
    return {tz.real() * theta.value(), Complex(0.0, tz.imag()) * theta.value()};
}

Complex theta_part(Complex z, const Unimodular& theta) {
    return theta_split_scalar(z, theta).first;
}

Complex theta_perp_part(Complex z, const Unimodular& theta) {
    return theta_split_scalar(z, theta).second;
}

ThetaDecomposition theta_split(const CMatrix& a, const Unimodular& theta) {
    require_square(a, "theta_split");
    const Complex t = theta.value();
    const Complex tc = theta.conj();
    CMatrix herm = 0.5 * (tc * a + t * a.adjoint()) * t;
    CMatrix skew = 0.5 * (tc * a - t * a.adjoint()) * t;
    return {theta, std::move(herm), std::move(skew)};
}

CMatrix theta_part(const CMatrix& a, const Unimodular& theta) {
    require_square(a, "theta_part");
    return 0.5 * (theta.conj() * a + theta.value() * a.adjoint()) * theta.value();
}

CMatrix theta_perp_part(const CMatrix& a, const Unimodular& theta) {
    require_square(a, "theta_perp_part");
    return 0.5 * (theta.conj() * a - theta.value() * a.adjoint()) * theta.value();
}

bool is_theta_hermitian(const CMatrix& a, const Unimodular& theta, const Tolerance& tol) {
    require_square(a, "is_theta_hermitian");
    const CMatrix n = theta.conj() * a;
    const double scale = std::max(1.0, a.norm());
    return (n - n.adjoint()).norm() <= tol.collinearity * scale;
}

std::optional<EssentiallyHermitianCert> essentially_hermitian(const CMatrix& a,
                                                              const Tolerance& tol) {
    require_square(a, "essentially_hermitian");
    const double defect = normality_defect(a);
    if (defect > tol.rel_normality)
        throw PreconditionError("essentially_hermitian: input not normal, defect " +
                                std::to_string(defect));
    const CVector lambda = normal_eig(a, tol).lambda;
    const Index n = lambda.size();

    const Complex mean = lambda.mean();
    double diameter = 0.0;
    for (Index j = 0; j < n; ++j)
        for (Index k = j + 1; k < n; ++k)
            diameter = std::max(diameter, std::abs(lambda(j) - lambda(k)));

    Unimodular theta;  // defaults to 1 for zero-diameter spectra
    if (diameter > tol.collinearity) {
        // total least squares: principal axis of the centered eigenvalue cloud
        double sxx = 0.0, syy = 0.0, sxy = 0.0;
        for (Index j = 0; j < n; ++j) {
            const Complex d = lambda(j) - mean;
            sxx += d.real() * d.real();
            syy += d.imag() * d.imag();
            sxy += d.real() * d.imag();
        }
        const double half = 0.5 * std::atan2(2.0 * sxy, sxx - syy);
        theta = Unimodular(Complex(std::cos(half), std::sin(half))).canonical();
    }

    double max_resid = 0.0;
    for (Index j = 0; j < n; ++j)
        max_resid = std::max(max_resid, std::abs(theta_perp_part(lambda(j) - mean, theta)));
    if (max_resid > tol.collinearity * (1.0 + diameter)) return std::nullopt;

    // alpha: perpendicular foot of the origin on the fitted line
    const Complex alpha = theta_perp_part(mean, theta);
    CMatrix h = theta.conj() * (a - alpha * CMatrix::Identity(n, n));
    h = 0.5 * (h + h.adjoint().eval());  // drop the numerically skew residue
    return EssentiallyHermitianCert{theta, alpha, std::move(h)};
}

}  // namespace normkit
