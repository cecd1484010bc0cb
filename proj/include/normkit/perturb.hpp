#pragma once

#include "normkit/spectral.hpp"

#include <utility>
#include <vector>

namespace normkit {

/// E = theta * u u*, the general normal rank-1 matrix.
struct Rank1Perturbation {
    Unimodular theta;
    CVector u;

    CMatrix matrix() const { return theta.value() * (u * u.adjoint()); }
};

/// E = theta * sum_j delta_j u_j u_j* with orthonormal u_j.
struct RankKPerturbation {
    Unimodular theta;
    std::vector<std::pair<double, CVector>> terms;

    CMatrix matrix(Index n) const;
};

/// Spectrum of a perturbed or augmented matrix split into the eigenvalues it
/// inherits from A and the ones that moved along the carrying line.
struct SpectrumPrediction {
    std::vector<std::pair<Index, Complex>> inherited;  // index into dec, value
    CVector perturbed_old;
    CVector perturbed_new;
    EigenLine line;
    bool interlacing_ok = false;

    CVector all_values() const;
};

enum class LineScanResult { AllNormal, OnlyEndpoints };

/// Normality test for gamma*A + mu*E via the theta-Hermitian part of [A,E*]
/// with theta = conj(gamma)*mu/|gamma*mu|. Cross-checked against the direct
/// defect of the sum.
bool check_sum_normal(const CMatrix& a, const CMatrix& e, Complex gamma, Complex mu,
                      const Tolerance& tol = {});

/// u = sum coeffs_j * u_{member_j}; returns (E = theta u u*, A + E).
std::pair<Rank1Perturbation, CMatrix> build_rank1(const CMatrix& a,
                                                  const NormalEigenDecomposition& dec,
                                                  const EigenLine& line, const CVector& coeffs);

/// True iff Theta-perp(A) and u u* commute, i.e. A + theta u u* is normal.
bool validate_rank1(const CMatrix& a, const Rank1Perturbation& pert, const Tolerance& tol = {});

SpectrumPrediction predict_rank1_spectrum(const CMatrix& a, const NormalEigenDecomposition& dec,
                                          const EigenLine& line, const CVector& coeffs,
                                          const Tolerance& tol = {});

/// Split a normality-preserving theta-Hermitian perturbation theta*H into
/// rank-1 terms along eigenvectors of Theta-perp(A).
RankKPerturbation decompose_rank_k(const CMatrix& a, const Unimodular& theta, const CMatrix& h,
                                   const Tolerance& tol = {});

/// A + sum theta_j H_j for pairwise commuting Hermitian H_j that each
/// individually preserve normality.
CMatrix combined_perturbation(const CMatrix& a,
                              const std::vector<std::pair<Unimodular, CMatrix>>& parts,
                              const Tolerance& tol = {});

/// Samples the open segment between A and B. AllNormal iff B - A is normal.
LineScanResult normal_line_scan(const CMatrix& a, const CMatrix& b, Index nsamples,
                                const Tolerance& tol = {});

/// Eigenvalues of A + tE over tgrid, matched across consecutive t.
std::vector<std::pair<double, CVector>> trajectory(const CMatrix& a, const CMatrix& e,
                                                   const RVector& tgrid,
                                                   const Tolerance& tol = {});

}  // namespace normkit
