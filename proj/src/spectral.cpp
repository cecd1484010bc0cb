#include "normkit/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace normkit {

namespace {

// deterministic internal seed for theta sampling inside normal_eig
constexpr std::uint64_t kInternalSeed = 0x9e3779b97f4a7c15ull;

void canonicalize_phases(CMatrix& u) {
    for (Index j = 0; j < u.cols(); ++j) {
        Index k = 0;
        double best = 0.0;
        for (Index i = 0; i < u.rows(); ++i) {
            const double m = std::abs(u(i, j));
            if (m > best + 1e-12) {
                best = m;
                k = i;
            }
        }
        const Complex pivot = u(k, j);
        if (std::abs(pivot) > 0) u.col(j) *= std::conj(pivot) / std::abs(pivot);
    }
}

bool lex_less(Complex a, Complex b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

void sort_lexicographic(CMatrix& u, CVector& lambda) {
    const Index n = lambda.size();
    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return lex_less(lambda(a), lambda(b)); });
    CMatrix us(u.rows(), n);
    CVector ls(n);
    for (Index j = 0; j < n; ++j) {
        us.col(j) = u.col(order[j]);
        ls(j) = lambda(order[j]);
    }
    u = std::move(us);
    lambda = std::move(ls);
}

// contiguous clusters of ascending real values, gap threshold relative to range
std::vector<std::pair<Index, Index>> cluster_ascending(const RVector& d) {
    const Index n = d.size();
    const double dmax = n ? std::max(std::abs(d(0)), std::abs(d(n - 1))) : 0.0;
    const double gap = 1e-8 * (1.0 + dmax);
    std::vector<std::pair<Index, Index>> out;
    Index start = 0;
    for (Index i = 1; i <= n; ++i) {
        if (i == n || d(i) - d(i - 1) > gap) {
            out.emplace_back(start, i);
            start = i;
        }
    }
    return out;
}

// one attempt of the two-stage diagonalization for a fixed theta
bool try_normal_eig(const CMatrix& a, const Unimodular& theta, const Tolerance& tol,
                    NormalEigenDecomposition& out) {
    const Index n = a.rows();
    const CMatrix na = theta.conj() * a;
    const CMatrix hh = 0.5 * (na + na.adjoint());                    // Hermitian part of conj(theta)A
    const CMatrix kh = Complex(0, -0.5) * (na - na.adjoint());       // -i * skew part, Hermitian

    HermitianEig eh = hermitian_eig(hh, tol);
    CMatrix u = eh.q;
    CVector lambda(n);

    const CMatrix k_in_basis = u.adjoint() * kh * u;
    for (auto [lo, hi] : cluster_ascending(eh.d)) {
        const Index m = hi - lo;
        const CMatrix block = k_in_basis.block(lo, lo, m, m);
        if ((block - block.adjoint()).norm() > 1e-8 * (1.0 + kh.norm())) return false;
        Eigen::SelfAdjointEigenSolver<CMatrix> es(0.5 * (block + block.adjoint()));
        if (es.info() != Eigen::Success) return false;
        u.middleCols(lo, m) = (u.middleCols(lo, m) * es.eigenvectors()).eval();
        for (Index i = 0; i < m; ++i)
            lambda(lo + i) = theta.value() * Complex(eh.d(lo + i), es.eigenvalues()(i));
    }

    const double scale = std::max(1.0, a.norm());
    if ((a * u - u * lambda.asDiagonal().toDenseMatrix()).norm() > tol.eig_residual * scale)
        return false;
    out.u = std::move(u);
    out.lambda = std::move(lambda);
    return true;
}

}  // namespace

NormalEigenDecomposition normal_eig(const CMatrix& a, const Tolerance& tol) {
    require_square(a, "normal_eig");
    const double defect = normality_defect(a);
    if (defect > tol.rel_normality)
        throw PreconditionError("normal_eig: input not normal, defect " + std::to_string(defect));

    std::mt19937_64 rng(kInternalSeed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    NormalEigenDecomposition dec;
    for (int attempt = 0; attempt < 6; ++attempt) {
        Unimodular theta = attempt == 0
                               ? Unimodular()
                               : Unimodular(std::polar(1.0, angle(rng)));
        if (try_normal_eig(a, theta, tol, dec)) {
            canonicalize_phases(dec.u);
            sort_lexicographic(dec.u, dec.lambda);
            return dec;
        }
    }
    throw NumericalError("normal_eig: no sampled theta produced a commuting refinement");
}

SimDiag simultaneous_diag(const CMatrix& a, const CMatrix& e, const Tolerance& tol) {
    require_square(a, "simultaneous_diag");
    require_same_shape(a, e, "simultaneous_diag");
    const double comm_scale = std::max(1.0, a.norm() * e.norm());
    const double comm = commutator(a, e).norm();
    if (comm > tol.rel_normality * comm_scale)
        throw PreconditionError("simultaneous_diag: inputs do not commute, ||[A,E]|| = " +
                                std::to_string(comm));

    NormalEigenDecomposition de = normal_eig(e, tol);  // lexicographic sort: equal values adjacent
    const Index n = a.rows();
    CMatrix s = de.u.adjoint() * a * de.u;

    // cluster equal eigenvalues of E
    std::vector<std::pair<Index, Index>> clusters;
    {
        const double scale = 1e-8 * (1.0 + de.lambda.cwiseAbs().maxCoeff());
        Index start = 0;
        for (Index i = 1; i <= n; ++i) {
            if (i == n || std::abs(de.lambda(i) - de.lambda(start)) > scale) {
                clusters.emplace_back(start, i);
                start = i;
            }
        }
    }

    CMatrix w = de.u;
    CVector la(n);
    for (auto [lo, hi] : clusters) {
        const Index m = hi - lo;
        CMatrix block = s.block(lo, lo, m, m);
        NormalEigenDecomposition db = normal_eig(block, tol);
        w.middleCols(lo, m) = (w.middleCols(lo, m) * db.u).eval();
        la.segment(lo, m) = db.lambda;
    }

    const double ra = (a * w - w * la.asDiagonal().toDenseMatrix()).norm();
    const double re = (e * w - w * de.lambda.asDiagonal().toDenseMatrix()).norm();
    if (ra > tol.eig_residual * std::max(1.0, a.norm()) ||
        re > tol.eig_residual * std::max(1.0, e.norm()))
        throw NumericalError("simultaneous_diag: residual above tolerance");
    return {std::move(w), std::move(la), std::move(de.lambda)};
}

EigenLine group_on_line(const NormalEigenDecomposition& dec, Complex y, const Unimodular& theta,
                        const Tolerance& tol) {
    const Unimodular tc = theta.canonical();
    EigenLine line;
    line.y = y;
    line.theta = tc;
    std::vector<double> rho;
    for (Index j = 0; j < dec.lambda.size(); ++j) {
        const Complex d = tc.conj() * (dec.lambda(j) - y);
        if (std::abs(d.imag()) <= tol.collinearity * (1.0 + std::abs(d))) {
            line.member_indices.push_back(j);
            rho.push_back(d.real());
        }
    }
    line.rho = Eigen::Map<RVector>(rho.data(), static_cast<Index>(rho.size()));
    return line;
}

bool theta_separates(const CVector& lambda, const Unimodular& theta, double sep) {
    for (Index p = 0; p < lambda.size(); ++p)
        for (Index q = p + 1; q < lambda.size(); ++q) {
            const Complex d = lambda(p) - lambda(q);
            if (std::abs(d) == 0.0) continue;
            if (std::abs((theta.conj() * d).real()) < sep * std::abs(d)) return false;
        }
    return true;
}

Unimodular feasible_theta(const CVector& lambda, std::mt19937_64& rng, double sep) {
    Unimodular one;
    if (theta_separates(lambda, one, sep)) return one;
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Unimodular theta(std::polar(1.0, angle(rng)));
        if (theta_separates(lambda, theta, sep)) return theta;
    }
    throw InfeasibleError("feasible_theta: no direction found within the attempt budget");
}

}  // namespace normkit
