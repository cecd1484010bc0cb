#include "normkit/perturb.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace normkit {

CMatrix RankKPerturbation::matrix(Index n) const {
    CMatrix e = CMatrix::Zero(n, n);
    for (const auto& [delta, u] : terms) e += delta * (u * u.adjoint());
    return theta.value() * e;
}

CVector SpectrumPrediction::all_values() const {
    CVector out(static_cast<Index>(inherited.size()) + perturbed_new.size());
    Index k = 0;
    for (const auto& [idx, val] : inherited) out(k++) = val;
    for (Index j = 0; j < perturbed_new.size(); ++j) out(k++) = perturbed_new(j);
    return out;
}

bool check_sum_normal(const CMatrix& a, const CMatrix& e, Complex gamma, Complex mu,
                      const Tolerance& tol) {
    require_square(a, "check_sum_normal");
    require_same_shape(a, e, "check_sum_normal");
    if (std::abs(gamma * mu) == 0.0)
        throw PreconditionError("check_sum_normal: gamma*mu must be nonzero");
    const Unimodular theta(std::conj(gamma) * mu);
    const CMatrix c = commutator(a, e.adjoint());
    const double lhs = theta_part(c, theta).norm();
    return lhs <= tol.rel_normality * std::max(1.0, a.norm() * e.norm());
}

std::pair<Rank1Perturbation, CMatrix> build_rank1(const CMatrix& a,
                                                  const NormalEigenDecomposition& dec,
                                                  const EigenLine& line, const CVector& coeffs) {
    if (coeffs.size() != line.p())
        throw ShapeError("build_rank1: coefficient count must equal line membership count");
    CVector u = CVector::Zero(a.rows());
    for (Index j = 0; j < coeffs.size(); ++j) u += coeffs(j) * dec.u.col(line.member_indices[j]);
    Rank1Perturbation pert{line.theta, std::move(u)};
    CMatrix aplus = a + pert.matrix();
    return {std::move(pert), std::move(aplus)};
}

bool validate_rank1(const CMatrix& a, const Rank1Perturbation& pert, const Tolerance& tol) {
    require_square(a, "validate_rank1");
    const CMatrix uu = pert.u * pert.u.adjoint();
    const double lhs = commutator(theta_perp_part(a, pert.theta), uu).norm();
    return lhs <= tol.rel_normality * std::max(1.0, a.norm() * pert.u.squaredNorm());
}

namespace {

bool interlaces(const RVector& inner, const RVector& outer, double slack) {
    // inner: sorted eigenvalues of the unperturbed block, outer: one per slot
    // rank-1 update case: |inner| == |outer|, inner_i <= outer_i <= inner_{i+1}
    // bordered case: |outer| == |inner| + 1, outer_i <= inner_i <= outer_{i+1}
    if (outer.size() == inner.size()) {
        for (Index i = 0; i < inner.size(); ++i) {
            if (outer(i) < inner(i) - slack) return false;
            if (i + 1 < inner.size() && outer(i) > inner(i + 1) + slack) return false;
        }
        return true;
    }
    if (outer.size() == inner.size() + 1) {
        for (Index i = 0; i < inner.size(); ++i)
            if (inner(i) < outer(i) - slack || inner(i) > outer(i + 1) + slack) return false;
        return true;
    }
    return false;
}

}  // namespace

SpectrumPrediction predict_rank1_spectrum(const CMatrix& a, const NormalEigenDecomposition& dec,
                                          const EigenLine& line, const CVector& coeffs,
                                          const Tolerance& tol) {
    if (coeffs.size() != line.p())
        throw ShapeError("predict_rank1_spectrum: coefficient count mismatch");
    SpectrumPrediction out;
    out.line = line;
    const Index p = line.p();

    std::vector<bool> member(dec.lambda.size(), false);
    for (Index idx : line.member_indices) member[idx] = true;
    for (Index j = 0; j < dec.lambda.size(); ++j)
        if (!member[j]) out.inherited.emplace_back(j, dec.lambda(j));

    out.perturbed_old.resize(p);
    for (Index j = 0; j < p; ++j) out.perturbed_old(j) = dec.lambda(line.member_indices[j]);
    if (p == 0) {
        out.perturbed_new.resize(0);
        out.interlacing_ok = true;
        return out;
    }

    // eigenvalues of R + r r* on the line coordinate; r = coeffs since the
    // member eigenvectors are orthonormal
    RVector rdiag = line.rho;
    CMatrix block = rdiag.cast<Complex>().asDiagonal();
    block += coeffs * coeffs.adjoint();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(block);
    const RVector rho_new = es.eigenvalues();

    out.perturbed_new.resize(p);
    for (Index j = 0; j < p; ++j)
        out.perturbed_new(j) = line.y + line.theta.value() * rho_new(j);

    RVector sorted_old = rdiag;
    std::sort(sorted_old.data(), sorted_old.data() + p);
    const double slack = 1e-10 * (1.0 + sorted_old.cwiseAbs().maxCoeff());
    out.interlacing_ok = interlaces(sorted_old, rho_new, slack);
    (void)tol;
    return out;
}

RankKPerturbation decompose_rank_k(const CMatrix& a, const Unimodular& theta, const CMatrix& h,
                                   const Tolerance& tol) {
    require_square(a, "decompose_rank_k");
    require_same_shape(a, h, "decompose_rank_k");
    const double hscale = std::max(1.0, h.norm());
    if ((h - h.adjoint()).norm() > 1e-10 * hscale)
        throw PreconditionError("decompose_rank_k: H must be Hermitian");
    const CMatrix sp = theta_perp_part(a, theta);
    const double comm = commutator(sp, h).norm();
    if (comm > tol.rel_normality * std::max(1.0, a.norm() * h.norm()))
        throw PreconditionError(
            "decompose_rank_k: [Theta-perp(A), H] != 0, perturbation does not preserve "
            "normality (||commutator|| = " + std::to_string(comm) + ")");

    SimDiag sd = simultaneous_diag(sp, h, tol);
    RankKPerturbation out;
    out.theta = theta;
    const double floor = 1e-12 * hscale;
    for (Index j = 0; j < sd.lambda_e.size(); ++j) {
        const double delta = sd.lambda_e(j).real();
        if (std::abs(delta) > floor) out.terms.emplace_back(delta, sd.w.col(j));
    }
    return out;
}

CMatrix combined_perturbation(const CMatrix& a,
                              const std::vector<std::pair<Unimodular, CMatrix>>& parts,
                              const Tolerance& tol) {
    require_square(a, "combined_perturbation");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const CMatrix& hi = parts[i].second;
        require_same_shape(a, hi, "combined_perturbation");
        if ((hi - hi.adjoint()).norm() > 1e-10 * std::max(1.0, hi.norm()))
            throw PreconditionError("combined_perturbation: H_" + std::to_string(i + 1) +
                                    " is not Hermitian");
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const double c = commutator(hi, parts[j].second).norm();
            if (c > tol.rel_normality * std::max(1.0, hi.norm() * parts[j].second.norm()))
                throw PreconditionError("combined_perturbation: [H_" + std::to_string(i + 1) +
                                        ",H_" + std::to_string(j + 1) + "] != 0");
        }
    }
    CMatrix e = CMatrix::Zero(a.rows(), a.cols());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        // each part must individually preserve normality
        decompose_rank_k(a, parts[i].first, parts[i].second, tol);
        e += parts[i].first.value() * parts[i].second;
    }
    if (normality_defect(e) > tol.rel_normality)
        throw NumericalError("combined_perturbation: E itself failed the normality check");
    return a + e;
}

LineScanResult normal_line_scan(const CMatrix& a, const CMatrix& b, Index nsamples,
                                const Tolerance& tol) {
    require_square(a, "normal_line_scan");
    require_same_shape(a, b, "normal_line_scan");
    const CMatrix e = b - a;
    const bool e_normal = normality_defect(e) <= tol.rel_normality;
    Index agree = 0;
    for (Index k = 1; k <= nsamples; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(nsamples + 1);
        const double defect = normality_defect(a + t * e);
        if ((defect <= tol.rel_normality) == e_normal) ++agree;
    }
    if (agree != nsamples)
        throw NumericalError("normal_line_scan: sample evidence contradicts the classification "
                             "of E; defect values are borderline");
    return e_normal ? LineScanResult::AllNormal : LineScanResult::OnlyEndpoints;
}

namespace {

CVector general_eigenvalues(const CMatrix& m, const Tolerance& tol) {
    if (normality_defect(m) <= tol.rel_normality) return normal_eig(m, tol).lambda;
    Eigen::ComplexEigenSolver<CMatrix> es(m, false);
    if (es.info() != Eigen::Success)
        throw NumericalError("trajectory: dense eigensolver failed to converge");
    return es.eigenvalues();
}

// match cur against prev, greedily assigning globally closest pairs
CVector match_to(const CVector& prev, const CVector& cur) {
    const Index n = prev.size();
    std::vector<std::tuple<double, Index, Index>> pairs;
    pairs.reserve(n * n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            pairs.emplace_back(std::abs(prev(i) - cur(j)), i, j);
    std::sort(pairs.begin(), pairs.end());
    std::vector<bool> row(n, false), col(n, false);
    CVector out(n);
    Index assigned = 0;
    for (const auto& [d, i, j] : pairs) {
        if (row[i] || col[j]) continue;
        out(i) = cur(j);
        row[i] = col[j] = true;
        if (++assigned == n) break;
    }
    return out;
}

}  // namespace

std::vector<std::pair<double, CVector>> trajectory(const CMatrix& a, const CMatrix& e,
                                                   const RVector& tgrid, const Tolerance& tol) {
    require_square(a, "trajectory");
    require_same_shape(a, e, "trajectory");
    std::vector<std::pair<double, CVector>> out;
    out.reserve(tgrid.size());
    for (Index k = 0; k < tgrid.size(); ++k) {
        CVector vals = general_eigenvalues(a + tgrid(k) * e, tol);
        if (!out.empty()) vals = match_to(out.back().second, vals);
        else {
            std::sort(vals.data(), vals.data() + vals.size(), [](Complex x, Complex y) {
                if (x.real() != y.real()) return x.real() < y.real();
                return x.imag() < y.imag();
            });
        }
        out.emplace_back(tgrid(k), std::move(vals));
    }
    return out;
}

}  // namespace normkit
