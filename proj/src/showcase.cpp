#include "normkit/showcase.hpp"

#include "normkit/augment.hpp"
#include "normkit/curve.hpp"
#include "normkit/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace normkit::showcase {

namespace {

const Complex kI{0.0, 1.0};

struct Recorder {
    CaseResult result;

    void check(const std::string& name, bool ok, double measured = 0.0) {
        std::ostringstream detail;
        detail << measured;
        result.assertions.push_back({name, ok, detail.str()});
    }
};

// multiset distance: greedy matching of closest pairs
double multiset_distance(CVector a, CVector b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0.0;
    std::vector<bool> used(b.size(), false);
    for (Index i = 0; i < a.size(); ++i) {
        Index best = -1;
        double bd = 1e300;
        for (Index j = 0; j < b.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(a(i) - b(j));
            if (d < bd) {
                bd = d;
                best = j;
            }
        }
        used[best] = true;
        worst = std::max(worst, bd);
    }
    return worst;
}

CaseResult run_61() {
    Recorder rec;
    rec.result.id = "6.1";
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 0) = 2.0 * kI;
    a(1, 1) = Complex(2, 1);
    a(2, 2) = -3.0;
    NormalEigenDecomposition dec = normal_eig(a);

    {  // line through y = 1 and the eigenvalue 2+i
        const Unimodular theta(Complex(1, 1));
        EigenLine line = group_on_line(dec, Complex(1, 0), theta);
        rec.check("l1: exactly one eigenvalue on the line", line.p() == 1,
                  static_cast<double>(line.p()));
        CVector coeffs(1);
        coeffs << Complex(1, 0);
        auto [aug, aplus] = augment1(a, dec, line, coeffs);
        const double defect = normality_defect(aplus);
        rec.check("l1: augmented matrix is normal", defect <= 1e-12, defect);
        rec.check("l1: border entries match theta*mu pattern",
                  std::abs(aplus(1, 3) - theta.canonical().value()) <= 1e-14 &&
                      std::abs(aplus(3, 1) - theta.canonical().value()) <= 1e-14);

        SpectrumPrediction pred = predict_augment1_spectrum(a, dec, line, coeffs);
        CVector actual = normal_eig(aplus).lambda;
        const double dist = multiset_distance(pred.all_values(), actual);
        rec.check("l1: predicted spectrum matches the eigensolver", dist <= 1e-9, dist);
        rec.check("l1: interlacing certificate", pred.interlacing_ok);
        // trace of the 2x2 line block fixes the sum of the two new eigenvalues
        const Complex expect_sum = theta.canonical().value() * std::sqrt(2.0) + 2.0;
        const double trace_err = std::abs(pred.perturbed_new.sum() - expect_sum);
        rec.check("l1: new eigenvalue sum equals the block trace", trace_err <= 1e-12, trace_err);
        double max_off = 0.0;
        for (Index j = 0; j < pred.perturbed_new.size(); ++j) {
            const Complex d = theta.conj() * (pred.perturbed_new(j) - Complex(1, 0));
            max_off = std::max(max_off, std::abs(d.imag()));
        }
        rec.check("l1: new eigenvalues stay on the line", max_off <= 1e-10, max_off);
    }

    const Complex y2(-2, 3);
    {  // line through y = -2+3i and the eigenvalue -3
        EigenLine line = group_on_line(dec, y2, Unimodular(Complex(1, 3)));
        rec.check("l2: exactly one eigenvalue on the line", line.p() == 1,
                  static_cast<double>(line.p()));
        CVector coeffs(1);
        coeffs << Complex(1, 0);
        auto [aug, aplus] = augment1(a, dec, line, coeffs);
        const double defect = normality_defect(aplus);
        rec.check("l2: augmented matrix is normal", defect <= 1e-12, defect);
    }
    {  // line through y = -2+3i, 2i and 2+i
        EigenLine line = group_on_line(dec, y2, Unimodular(Complex(-2, 1)));
        rec.check("l3: two eigenvalues on the line", line.p() == 2,
                  static_cast<double>(line.p()));
        CVector coeffs(2);
        coeffs << Complex(1, 0), Complex(1, 0);
        auto [aug, aplus] = augment1(a, dec, line, coeffs);
        const double defect = normality_defect(aplus);
        rec.check("l3: augmented matrix is normal", defect <= 1e-12, defect);
        SpectrumPrediction pred = predict_augment1_spectrum(a, dec, line, coeffs);
        const double dist = multiset_distance(pred.all_values(), normal_eig(aplus).lambda);
        rec.check("l3: predicted spectrum matches the eigensolver", dist <= 1e-9, dist);
        rec.check("l3: inherited eigenvalue is -3",
                  pred.inherited.size() == 1 &&
                      std::abs(pred.inherited[0].second - Complex(-3, 0)) <= 1e-12);
    }
    return rec.result;
}

CaseResult run_621() {
    Recorder rec;
    rec.result.id = "6.2.1";
    CMatrix a(2, 2), b(2, 2);
    a << 0, 1, 1, 0;
    b << 0, 1, -1, 0;
    const CMatrix e = b - a;

    rec.check("scan classifies the segment as only-endpoints-normal",
              normal_line_scan(a, b, 9) == LineScanResult::OnlyEndpoints);

    {  // commutator of A + tE at t = 1/2 against the closed form
        const CMatrix at = a + 0.5 * e;
        const CMatrix c = commutator(at, at.adjoint());
        CMatrix expect = CMatrix::Zero(2, 2);  // 1-(1-2t)^2 = 1 at t = 1/2
        expect(0, 0) = 1.0;
        expect(1, 1) = -1.0;
        rec.check("commutator at t=1/2 matches the closed form",
                  (c - expect).norm() <= 1e-14, (c - expect).norm());
        const double defect = normality_defect(at);
        const double expected_defect = std::sqrt(2.0) / std::max(1.0, at.squaredNorm());
        rec.check("defect at t=1/2 equals ||diag(1,-1)||_F / ||A+E/2||_F^2",
                  std::abs(defect - expected_defect) <= 1e-12,
                  std::abs(defect - expected_defect));
    }

    {  // eigenvalue paths +-sqrt(1-2t)
        RVector grid(11);
        for (Index k = 0; k < 11; ++k) grid(k) = 0.1 * static_cast<double>(k);
        auto paths = trajectory(a, e, grid);
        double worst = 0.0;
        for (const auto& [t, vals] : paths) {
            const Complex root = std::sqrt(Complex(1.0 - 2.0 * t, 0.0));
            CVector expect(2);
            expect << root, -root;
            worst = std::max(worst, multiset_distance(vals, expect));
        }
        rec.check("eigenvalues match +-sqrt(1-2t)", worst <= 1e-10, worst);
    }
    return rec.result;
}

CaseResult run_622() {
    Recorder rec;
    rec.result.id = "6.2.2";
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 0) = 1.0;
    a(1, 1) = kI;
    a(2, 2) = Complex(1, 1);
    CMatrix e(3, 3);
    e << 4, 0, 0, 0, 2, 2, 0, 2, 2;
    e /= 16.0;
    const Unimodular theta;  // theta = 1

    CVector v2(3);
    v2 << 0.0, std::sqrt(0.5), std::sqrt(0.5);

    {
        RankKPerturbation terms = decompose_rank_k(a, theta, e);
        rec.check("rank-2 perturbation splits into two rank-1 terms", terms.terms.size() == 2,
                  static_cast<double>(terms.terms.size()));
        bool found_e1 = false, found_v2 = false;
        for (const auto& [delta, u] : terms.terms) {
            if (std::abs(delta - 0.25) > 1e-12) continue;
            if (std::abs(std::abs(u(0)) - 1.0) <= 1e-10) found_e1 = true;
            if (std::abs(std::abs(u.dot(v2)) - 1.0) <= 1e-10) found_v2 = true;
        }
        rec.check("terms are (1/4, e1) and (1/4, v2) up to phase", found_e1 && found_v2);
        const double err = (terms.matrix(3) - e).norm();
        rec.check("terms reassemble E", err <= 1e-12, err);
    }

    {  // the naive rank-1 split does not preserve normality, the eigenvector one does
        CVector u1(3);
        u1 << std::sqrt(2.0) / 4.0, 0.25, 0.25;
        rec.check("u1 u1* fails the rank-1 criterion",
                  !validate_rank1(a, Rank1Perturbation{theta, u1}));
        CVector e1 = CVector::Zero(3);
        e1(0) = 1.0;
        rec.check("v1 v1* passes the rank-1 criterion",
                  validate_rank1(a, Rank1Perturbation{theta, e1}));
        rec.check("v2 v2* passes the rank-1 criterion",
                  validate_rank1(a, Rank1Perturbation{theta, v2}));
    }

    RVector grid(41);
    for (Index k = 0; k < 41; ++k) grid(k) = 0.1 * static_cast<double>(k);
    {  // closed-form paths of the preserving perturbation
        auto paths = trajectory(a, e, grid);
        double worst = 0.0;
        for (const auto& [t, vals] : paths) {
            const double s = std::sqrt(1.0 + t * t / 16.0);
            CVector expect(3);
            expect << Complex(1.0 + 0.25 * t, 0.0), kI + 0.5 * (1.0 + 0.25 * t + s),
                kI + 0.5 * (1.0 + 0.25 * t - s);
            worst = std::max(worst, multiset_distance(vals, expect));
        }
        rec.check("eigenvalue paths match the closed forms", worst <= 1e-10, worst);
    }
    {  // the non-preserving split leaves the horizontal lines
        CVector u1(3);
        u1 << std::sqrt(2.0) / 4.0, 0.25, 0.25;
        const CMatrix e1 = u1 * u1.adjoint();
        auto paths = trajectory(a, e1, grid);
        double max_dev = 0.0;
        for (const auto& [t, vals] : paths)
            for (Index j = 0; j < vals.size(); ++j)
                max_dev = std::max(max_dev,
                                   std::min(std::abs(vals(j).imag()),
                                            std::abs(vals(j).imag() - 1.0)));
        rec.check("paths of A + t E1 leave the horizontal lines", max_dev > 1e-3, max_dev);
    }
    return rec.result;
}

CaseResult run_63() {
    Recorder rec;
    rec.result.id = "6.3";
    CMatrix a = CMatrix::Zero(3, 3);
    a(0, 0) = 5.0 * kI;
    a(1, 1) = 1.0;
    a(2, 2) = Complex(2, 2);

    PolyCurve curve{Unimodular(), RealPolynomial{(RVector(3) << 1, -2, 1).finished()}};
    CMatrix m(2, 2), q(2, 2);
    m << 1, 1, 1, 2;
    q << 1, 1, 1, -1;
    q *= std::sqrt(0.5);

    QuadAugmentation aug = quad_augment(a, curve, m, q);

    const double st = std::sqrt(2.0), hs = 0.5 * std::sqrt(2.0);
    CMatrix expect(5, 5);
    expect << 5.0 * kI, 0, 0, st, Complex(st, st),
        0, 1, 0, 0, 0,
        0, 0, Complex(2, 2), hs, Complex(-hs, -hs),
        st, 0, hs, Complex(1, 3.5), Complex(1, 2.5),
        Complex(st, st), 0, Complex(-hs, -hs), Complex(1, 2.5), Complex(2, 4.5);
    const double entry_err = (aug.a_plus - expect).cwiseAbs().maxCoeff();
    rec.check("augmented matrix matches the worked 5x5 entrywise", entry_err <= 1e-12, entry_err);

    const double defect = normality_defect(aug.a_plus);
    rec.check("augmented matrix is normal", defect <= 1e-12, defect);

    CVector lam = normal_eig(aug.a_plus).lambda;
    double worst = 0.0;
    for (Index j = 0; j < lam.size(); ++j)
        worst = std::max(worst, std::abs(curve_offset(curve, lam(j))));
    rec.check("all eigenvalues lie on rho + i(1-rho)^2", worst <= 1e-9, worst);

    const double lead = normality_defect(CMatrix(aug.a_plus.topLeftCorner(4, 4)));
    const double trail = normality_defect(CMatrix(aug.a_plus.bottomRightCorner(2, 2)));
    rec.check("leading 4x4 principal submatrix is not normal", lead > 1e-3, lead);
    rec.check("trailing 2x2 principal submatrix is not normal", trail > 1e-3, trail);

    const CMatrix x = theta_part(a, curve.theta);
    CMatrix expect_x = CMatrix::Zero(3, 3);
    expect_x(1, 1) = 1.0;
    expect_x(2, 2) = 2.0;
    rec.check("Hermitian part of A is diag(0,1,2)", (x - expect_x).norm() <= 1e-14);
    return rec.result;
}

}  // namespace

bool CaseResult::all_passed() const {
    return std::all_of(assertions.begin(), assertions.end(),
                       [](const Assertion& a) { return a.passed; });
}

CaseResult run_case(const std::string& id) {
    if (id == "6.1") return run_61();
    if (id == "6.2.1") return run_621();
    if (id == "6.2.2") return run_622();
    if (id == "6.3") return run_63();
    throw std::invalid_argument("unknown example id '" + id + "'");
}

std::vector<CaseResult> run_all() {
    return {run_61(), run_621(), run_622(), run_63()};
}

}  // namespace normkit::showcase
