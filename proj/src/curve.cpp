#include "normkit/curve.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace normkit {

double RealPolynomial::eval(double x) const {
    double acc = 0.0;
    for (Index j = coeffs.size() - 1; j >= 0; --j) acc = acc * x + coeffs(j);
    return acc;
}

CMatrix RealPolynomial::eval(const CMatrix& h) const {
    require_square(h, "RealPolynomial::eval");
    const Index n = h.rows();
    CMatrix acc = CMatrix::Zero(n, n);
    for (Index j = coeffs.size() - 1; j >= 0; --j) {
        acc = (acc * h).eval();
        acc.diagonal().array() += coeffs(j);
    }
    return acc;
}

RealPolynomial RealPolynomial::trimmed() const {
    if (coeffs.size() == 0) return {};
    const double floor = 1e-10 * coeffs.cwiseAbs().maxCoeff();
    Index last = -1;
    for (Index j = 0; j < coeffs.size(); ++j)
        if (std::abs(coeffs(j)) > floor) last = j;
    if (last < 0) return {RVector::Zero(1)};
    return {coeffs.head(last + 1)};
}

RealPolynomial newton_interpolate(const RVector& x, const RVector& y) {
    const Index n = x.size();
    if (n == 0) return {RVector::Zero(1)};
    if (y.size() != n) throw ShapeError("newton_interpolate: node count mismatch");
    // divided-difference table, in place
    RVector dd = y;
    for (Index level = 1; level < n; ++level)
        for (Index i = n - 1; i >= level; --i)
            dd(i) = (dd(i) - dd(i - 1)) / (x(i) - x(i - level));
    // expand the Newton form into monomial coefficients
    RVector coeffs = RVector::Zero(n);
    RVector basis = RVector::Zero(n);  // product (t - x_0)...(t - x_{k-1})
    basis(0) = 1.0;
    Index basis_deg = 0;
    for (Index k = 0; k < n; ++k) {
        for (Index j = 0; j <= basis_deg; ++j) coeffs(j) += dd(k) * basis(j);
        if (k + 1 < n) {
            for (Index j = basis_deg + 1; j >= 1; --j)
                basis(j) = basis(j - 1) - x(k) * basis(j);
            basis(0) = -x(k) * basis(0);
            ++basis_deg;
        }
    }
    return RealPolynomial{coeffs}.trimmed();
}

RealPolynomial lagrange_pi(const NormalEigenDecomposition& dec, const Unimodular& theta) {
    std::vector<double> xs, ys;
    for (Index j = 0; j < dec.lambda.size(); ++j) {
        const Complex t = theta.conj() * dec.lambda(j);
        const double x = t.real(), y = t.imag();
        bool duplicate = false;
        for (std::size_t k = 0; k < xs.size(); ++k) {
            if (std::abs(xs[k] - x) <= 1e-10 * (1.0 + std::abs(x))) {
                if (std::abs(ys[k] - y) > 1e-8 * (1.0 + std::abs(y)))
                    throw InfeasibleError(
                        "lagrange_pi: theta does not separate distinct eigenvalues");
                duplicate = true;
                break;
            }
        }
        if (!duplicate) {
            xs.push_back(x);
            ys.push_back(y);
        }
    }
    const Index m = static_cast<Index>(xs.size());
    return newton_interpolate(Eigen::Map<RVector>(xs.data(), m),
                              Eigen::Map<RVector>(ys.data(), m));
}

namespace {

CVector poly_apply(const RealPolynomial& p, const CMatrix& h, const CVector& v) {
    CVector acc = CVector::Zero(v.size());
    for (Index j = p.coeffs.size() - 1; j >= 0; --j) acc = h * acc + p.coeffs(j) * v;
    return acc;
}

struct LanczosState {
    std::vector<CVector> basis;
    std::vector<double> alpha;
    std::vector<double> beta;  // beta[j] couples basis[j] and basis[j+1]
    bool exhausted = false;
};

// one Lanczos step with full reorthogonalization
void lanczos_extend(LanczosState& st, const CMatrix& h) {
    const CVector& q = st.basis.back();
    CVector w = h * q;
    const double a = std::real(q.dot(w));
    st.alpha.push_back(a);
    w -= a * q;
    if (st.basis.size() > 1) w -= st.beta.back() * st.basis[st.basis.size() - 2];
    for (const CVector& b : st.basis) w -= b.dot(w) * b;  // reorthogonalize
    const double nb = w.norm();
    if (nb <= 1e-12 || st.basis.size() == static_cast<std::size_t>(h.rows())) {
        st.exhausted = true;
        return;
    }
    st.beta.push_back(nb);
    st.basis.push_back(w / nb);
}

}  // namespace

RealPolynomial krylov_pi(const CMatrix& a, const Unimodular& theta, const CVector& v,
                         std::mt19937_64& rng, double tol) {
    require_square(a, "krylov_pi");
    const Index n = a.rows();
    if (v.size() != n) throw ShapeError("krylov_pi: vector length mismatch");
    if (v.norm() == 0.0) throw PreconditionError("krylov_pi: zero start vector");

    const CMatrix na = theta.conj() * a;
    const CMatrix hh = 0.5 * (na + na.adjoint());
    const CMatrix kh = Complex(0, -0.5) * (na - na.adjoint());  // Hermitian, target
    const double scale = 1.0 + a.norm();

    std::normal_distribution<double> gauss(0.0, 1.0);
    auto random_vector = [&] {
        CVector x(n);
        for (Index i = 0; i < n; ++i) x(i) = Complex(gauss(rng), gauss(rng));
        return x;
    };
    CVector probe = random_vector();

    CVector start = v / v.norm();
    for (int attempt = 0; attempt < 3; ++attempt) {
        LanczosState st;
        st.basis.push_back(start);
        while (true) {
            lanczos_extend(st, hh);
            const Index k = static_cast<Index>(st.alpha.size());  // Krylov dimension so far
            // Ritz decomposition of the k x k tridiagonal
            RMatrix t = RMatrix::Zero(k, k);
            for (Index j = 0; j < k; ++j) {
                t(j, j) = st.alpha[j];
                if (j + 1 < k) t(j, j + 1) = t(j + 1, j) = st.beta[j];
            }
            Eigen::SelfAdjointEigenSolver<RMatrix> es(t);
            const RVector tau = es.eigenvalues();
            const RMatrix s = es.eigenvectors();

            // fit pi(tau_i) from the projected target: pi(T) e1 = V* Kh v0
            CVector g(k);
            {
                CVector b = kh * start;
                for (Index j = 0; j < k; ++j) g(j) = st.basis[j].dot(b);
            }
            bool ok = true;
            RVector values(k);
            for (Index i = 0; i < k; ++i) {
                const double w1 = s(0, i);
                if (std::abs(w1) < 1e-12) {
                    ok = false;
                    break;
                }
                const Complex val = (s.col(i).cast<Complex>().dot(g)) / w1;
                if (std::abs(val.imag()) > 1e-8 * scale) {
                    ok = false;  // target not a real polynomial of hh on this space
                    break;
                }
                values(i) = val.real();
            }
            if (ok) {
                RealPolynomial pi = newton_interpolate(tau, values);
                const double r1 = (poly_apply(pi, hh, v) - kh * v).norm();
                const double r2 = (poly_apply(pi, hh, probe) - kh * probe).norm();
                if (r1 <= tol * scale * v.norm() && r2 <= tol * scale * probe.norm())
                    return pi;
            }
            if (st.exhausted) break;  // invariant subspace reached, cannot escalate
        }
        // the start vector missed part of the spectrum; mix in fresh randomness
        start += random_vector();
        start /= start.norm();
    }
    throw NumericalError(
        "krylov_pi: no converging polynomial; matrix not normal or theta infeasible");
}

Complex curve_eval(const PolyCurve& c, double rho) {
    return c.theta.value() * rho + Complex(0, 1) * c.theta.value() * c.pi.eval(rho);
}

double curve_offset(const PolyCurve& c, Complex z) {
    const Complex t = c.theta.conj() * z;
    return t.imag() - c.pi.eval(t.real());
}

CurveRegion classify_point(const PolyCurve& c, Complex z, double tol) {
    if (c.pi.coeffs.size() != 3 || !(c.pi.coeffs(2) > 0.0))
        throw PreconditionError("classify_point: curve must be quadratic with r_2 > 0");
    const double g = curve_offset(c, z);
    if (std::abs(g) <= tol * (1.0 + std::abs(z))) return CurveRegion::OnCurve;
    return g > 0.0 ? CurveRegion::ConvexSide : CurveRegion::OtherSide;
}

}  // namespace normkit
