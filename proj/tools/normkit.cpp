// normkit command line front end: inspect matrices, build normality
// preserving perturbations and augmentations, dump eigenvalue trajectories.
#include "normkit/augment.hpp"
#include "normkit/io.hpp"
#include "normkit/showcase.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using namespace normkit;
using nlohmann::ordered_json;

constexpr int kExitIo = 2;
constexpr int kExitShape = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitAssertion = 5;

Tolerance g_tol;
std::uint64_t g_seed = 42;

void apply_tol_string(const std::string& s) {
    std::istringstream in(s);
    std::string item;
    std::vector<double> vals;
    while (std::getline(in, item, ',')) vals.push_back(std::stod(item));
    if (vals.empty() || vals.size() > 3)
        throw CLI::ValidationError("--tol expects 1 to 3 comma separated values");
    g_tol.rel_normality = vals[0];
    if (vals.size() > 1) g_tol.collinearity = vals[1];
    if (vals.size() > 2) g_tol.eig_residual = vals[2];
}

Complex parse_complex(const std::string& s) {
    std::istringstream in(s);
    double re = 0, im = 0;
    char comma = 0;
    if (!(in >> re)) throw CLI::ValidationError("expected 're,im', got '" + s + "'");
    if (in >> comma >> im && comma != ',')
        throw CLI::ValidationError("expected 're,im', got '" + s + "'");
    return {re, im};
}

ordered_json to_json(Complex z) { return {z.real(), z.imag()}; }

ordered_json to_json(const CVector& v) {
    ordered_json out = ordered_json::array();
    for (Index j = 0; j < v.size(); ++j) out.push_back(to_json(v(j)));
    return out;
}

ordered_json to_json(const RVector& v) {
    ordered_json out = ordered_json::array();
    for (Index j = 0; j < v.size(); ++j) out.push_back(v(j));
    return out;
}

void emit(const ordered_json& report) { std::cout << report.dump(2) << "\n"; }

ordered_json prediction_json(const SpectrumPrediction& pred) {
    ordered_json out;
    out["p"] = pred.perturbed_old.size();
    ordered_json inherited = ordered_json::array();
    for (const auto& [idx, val] : pred.inherited)
        inherited.push_back({{"index", idx}, {"value", to_json(val)}});
    out["inherited"] = inherited;
    out["perturbed_old"] = to_json(pred.perturbed_old);
    out["perturbed_new"] = to_json(pred.perturbed_new);
    out["interlacing_ok"] = pred.interlacing_ok;
    return out;
}

int cmd_inspect(const std::string& path) {
    CMatrix a = read_matrix_auto(path);
    require_square(a, "inspect");
    ordered_json report;
    report["file"] = path;
    report["rows"] = a.rows();
    const double defect = normality_defect(a);
    report["normality_defect"] = defect;
    report["is_normal"] = defect <= g_tol.rel_normality;
    if (defect <= g_tol.rel_normality) {
        NormalEigenDecomposition dec = normal_eig(a, g_tol);
        report["eigenvalues"] = to_json(dec.lambda);
        if (auto cert = essentially_hermitian(a, g_tol)) {
            report["essentially_hermitian"] = {{"theta", to_json(cert->theta.value())},
                                               {"alpha", to_json(cert->alpha)}};
        } else {
            report["essentially_hermitian"] = nullptr;
        }
        std::mt19937_64 rng(g_seed);
        Unimodular theta = feasible_theta(dec.lambda, rng);
        report["theta"] = to_json(theta.value());
        report["pi"] = to_json(lagrange_pi(dec, theta).coeffs);
    }
    emit(report);
    return 0;
}

int cmd_augment1(const std::string& path, const std::string& y_str, const std::string& theta_str,
                 const std::string& coeffs_path, const std::string& out_path) {
    CMatrix a = read_matrix_auto(path);
    const Complex y = parse_complex(y_str);
    Unimodular theta(parse_complex(theta_str));
    if (std::abs(theta.value() - theta.canonical().value()) > 1e-14)
        std::cerr << "note: theta normalized into the upper half circle\n";
    theta = theta.canonical();

    NormalEigenDecomposition dec = normal_eig(a, g_tol);
    EigenLine line = group_on_line(dec, y, theta, g_tol);
    CVector coeffs;
    if (coeffs_path.empty()) {
        coeffs = CVector::Ones(line.p());
    } else {
        CMatrix cm = read_matrix_auto(coeffs_path);
        coeffs = Eigen::Map<CVector>(cm.data(), cm.size());
    }
    ordered_json report;
    if (line.p() == 0)
        report["notice"] = "no eigenvalues on the requested line; block diagonal augmentation";
    auto [aug, aplus] = augment1(a, dec, line, coeffs, g_tol);
    report["p"] = line.p();
    report["theta"] = to_json(aug.theta.value());
    report["normality_defect"] = normality_defect(aplus);
    report["prediction"] = prediction_json(predict_augment1_spectrum(a, dec, line, coeffs, g_tol));
    report["eigenvalues"] = to_json(normal_eig(aplus, g_tol).lambda);
    if (!out_path.empty()) write_matrix_json(out_path, aplus);
    emit(report);
    return 0;
}

int cmd_augment_quad(const std::string& path, const std::string& theta_str,
                     const std::string& pi_str, const std::string& m_path,
                     const std::string& q_path, const std::string& out_path) {
    CMatrix a = read_matrix_auto(path);
    const Unimodular theta(parse_complex(theta_str));
    std::istringstream in(pi_str);
    std::vector<double> rc;
    std::string item;
    while (std::getline(in, item, ',')) rc.push_back(std::stod(item));
    if (rc.size() != 3) throw CLI::ValidationError("--pi expects r0,r1,r2");
    PolyCurve curve{theta, RealPolynomial{Eigen::Map<RVector>(rc.data(), 3)}};

    // count the off-curve eigenvalues to size the default M and Q
    NormalEigenDecomposition dec = normal_eig(a, g_tol);
    Index p = 0;
    for (Index j = 0; j < dec.lambda.size(); ++j)
        if (classify_point(curve, dec.lambda(j), g_tol.collinearity) == CurveRegion::ConvexSide)
            ++p;
    CMatrix m = m_path.empty() ? CMatrix::Identity(p, p) : read_matrix_auto(m_path);
    CMatrix q = q_path.empty() ? CMatrix::Identity(p, p) : read_matrix_auto(q_path);

    QuadAugmentation aug = quad_augment(a, curve, m, q, g_tol);
    ordered_json report;
    report["p"] = p;
    report["normality_defect"] = normality_defect(aug.a_plus);
    CVector lam = normal_eig(aug.a_plus, g_tol).lambda;
    report["eigenvalues"] = to_json(lam);
    RVector offsets(lam.size());
    for (Index j = 0; j < lam.size(); ++j) offsets(j) = curve_offset(curve, lam(j));
    report["curve_offsets"] = to_json(offsets);
    if (!out_path.empty()) write_matrix_json(out_path, aug.a_plus);
    emit(report);
    return 0;
}

int cmd_perturb_rank1(const std::string& path, const std::string& theta_str,
                      const std::string& u_path, const std::string& out_path) {
    CMatrix a = read_matrix_auto(path);
    const Unimodular theta(parse_complex(theta_str));
    CMatrix um = read_matrix_auto(u_path);
    CVector u = Eigen::Map<CVector>(um.data(), um.size());
    Rank1Perturbation pert{theta, u};
    if (!validate_rank1(a, pert, g_tol))
        throw InfeasibleError("rank1: u is not an eigenvector of the theta-skew part of A; "
                              "the perturbation does not preserve normality");

    NormalEigenDecomposition dec = normal_eig(a, g_tol);
    // locate the carrying line through the eigenvalue of the dominant component
    Index anchor = 0;
    double best = 0.0;
    for (Index j = 0; j < dec.lambda.size(); ++j) {
        const double w = std::abs(dec.u.col(j).dot(u));
        if (w > best) {
            best = w;
            anchor = j;
        }
    }
    EigenLine line = group_on_line(dec, dec.lambda(anchor), theta, g_tol);
    CVector coeffs(line.p());
    for (Index j = 0; j < line.p(); ++j) coeffs(j) = dec.u.col(line.member_indices[j]).dot(u);
    const CMatrix aplus = a + pert.matrix();
    ordered_json report;
    report["kind"] = "rank1";
    report["normality_defect"] = normality_defect(aplus);
    report["prediction"] = prediction_json(predict_rank1_spectrum(a, dec, line, coeffs, g_tol));
    report["eigenvalues"] = to_json(normal_eig(aplus, g_tol).lambda);
    if (!out_path.empty()) write_matrix_json(out_path, aplus);
    emit(report);
    return 0;
}

int cmd_perturb_rankk(const std::string& path, const std::string& theta_str,
                      const std::string& h_path, const std::string& out_path) {
    CMatrix a = read_matrix_auto(path);
    const Unimodular theta(parse_complex(theta_str));
    CMatrix h = read_matrix_auto(h_path);
    RankKPerturbation pert = decompose_rank_k(a, theta, h, g_tol);
    const CMatrix aplus = a + theta.value() * h;
    ordered_json report;
    report["kind"] = "rankk";
    ordered_json terms = ordered_json::array();
    for (const auto& [delta, u] : pert.terms)
        terms.push_back({{"delta", delta}, {"u", to_json(u)}});
    report["terms"] = terms;
    report["normality_defect"] = normality_defect(aplus);
    report["eigenvalues"] = to_json(normal_eig(aplus, g_tol).lambda);
    if (!out_path.empty()) write_matrix_json(out_path, aplus);
    emit(report);
    return 0;
}

int cmd_perturb_combined(const std::string& path, const std::vector<std::string>& part_specs,
                         const std::string& out_path) {
    CMatrix a = read_matrix_auto(path);
    std::vector<std::pair<Unimodular, CMatrix>> parts;
    for (const std::string& spec : part_specs) {
        const auto colon = spec.rfind(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("--part expects 'theta_re,theta_im:file'");
        parts.emplace_back(Unimodular(parse_complex(spec.substr(0, colon))),
                           read_matrix_auto(spec.substr(colon + 1)));
    }
    const CMatrix aplus = combined_perturbation(a, parts, g_tol);
    ordered_json report;
    report["kind"] = "combined";
    report["parts"] = parts.size();
    report["normality_defect"] = normality_defect(aplus);
    report["eigenvalues"] = to_json(normal_eig(aplus, g_tol).lambda);
    if (!out_path.empty()) write_matrix_json(out_path, aplus);
    emit(report);
    return 0;
}

int cmd_trajectory(const std::string& a_path, const std::string& e_path, double tmin, double tmax,
                   Index steps, const std::string& out_path) {
    CMatrix a = read_matrix_auto(a_path);
    CMatrix e = read_matrix_auto(e_path);
    if (steps < 1) throw CLI::ValidationError("--steps must be >= 1");
    RVector grid(steps);
    for (Index k = 0; k < steps; ++k)
        grid(k) = steps == 1 ? tmin
                             : tmin + (tmax - tmin) * static_cast<double>(k) /
                                          static_cast<double>(steps - 1);
    auto paths = trajectory(a, e, grid, g_tol);
    if (out_path.empty()) {
        write_trajectory_csv(std::cout, paths);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw IoError("cannot write '" + out_path + "'");
        write_trajectory_csv(out, paths);
    }
    return 0;
}

int cmd_examples(const std::string& which) {
    std::vector<showcase::CaseResult> results;
    if (which == "all")
        results = showcase::run_all();
    else
        results.push_back(showcase::run_case(which));
    ordered_json report = ordered_json::array();
    bool ok = true;
    for (const auto& res : results) {
        ordered_json c;
        c["example"] = res.id;
        ordered_json checks = ordered_json::array();
        for (const auto& a : res.assertions) {
            checks.push_back({{"name", a.name}, {"passed", a.passed}, {"measured", a.detail}});
            ok = ok && a.passed;
        }
        c["assertions"] = checks;
        c["passed"] = res.all_passed();
        report.push_back(c);
    }
    emit(report);
    return ok ? 0 : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"normality preserving perturbations and augmentations of normal matrices"};
    app.require_subcommand(1);
    std::string tol_str;
    app.add_option("--tol", tol_str, "tolerance bundle: rel_normality[,collinearity[,eig_residual]]");
    app.add_option("--seed", g_seed, "seed for randomized internals")->capture_default_str();

    std::string path, y_str, theta_str = "1,0", coeffs_path, out_path, pi_str;
    std::string m_path, q_path, u_path, h_path, which = "all", e_path;
    std::vector<std::string> part_specs;
    double tmin = 0.0, tmax = 1.0;
    Index steps = 11;

    auto* inspect = app.add_subcommand("inspect", "defect, spectrum, curve of a matrix");
    inspect->add_option("matrix", path)->required();

    auto* aug1 = app.add_subcommand("augment1", "normality preserving 1-augmentation");
    aug1->add_option("matrix", path)->required();
    aug1->add_option("--y", y_str, "base point re,im")->required();
    aug1->add_option("--theta", theta_str, "line slope re,im")->required();
    aug1->add_option("--coeffs", coeffs_path, "coefficient vector file (default: all ones)");
    aug1->add_option("--out", out_path, "write the augmented matrix here");

    auto* augq = app.add_subcommand("augment-quad", "augmentation onto a quadratic curve");
    augq->add_option("matrix", path)->required();
    augq->add_option("--theta", theta_str, "curve direction re,im");
    augq->add_option("--pi", pi_str, "polynomial r0,r1,r2")->required();
    augq->add_option("--M", m_path, "Hermitian block file (default: identity)");
    augq->add_option("--Q", q_path, "unitary block file (default: identity)");
    augq->add_option("--out", out_path, "write the augmented matrix here");

    auto* pert = app.add_subcommand("perturb", "normality preserving perturbations");
    pert->require_subcommand(1);
    auto* rank1 = pert->add_subcommand("rank1", "A + theta u u*");
    rank1->add_option("matrix", path)->required();
    rank1->add_option("--theta", theta_str)->required();
    rank1->add_option("--u", u_path, "vector file")->required();
    rank1->add_option("--out", out_path);
    auto* rankk = pert->add_subcommand("rankk", "A + theta H, H Hermitian");
    rankk->add_option("matrix", path)->required();
    rankk->add_option("--theta", theta_str)->required();
    rankk->add_option("--H", h_path, "Hermitian matrix file")->required();
    rankk->add_option("--out", out_path);
    auto* combined = pert->add_subcommand("combined", "A + sum theta_j H_j");
    combined->add_option("matrix", path)->required();
    combined->add_option("--part", part_specs, "theta_re,theta_im:file")->required();
    combined->add_option("--out", out_path);

    auto* traj = app.add_subcommand("trajectory", "eigenvalues of A + tE as CSV");
    traj->add_option("matrixA", path)->required();
    traj->add_option("matrixE", e_path)->required();
    traj->add_option("--tmin", tmin)->capture_default_str();
    traj->add_option("--tmax", tmax)->capture_default_str();
    traj->add_option("--steps", steps)->capture_default_str();
    traj->add_option("--out", out_path, "CSV path (default: stdout)");

    auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
    examples->add_option("--which", which, "6.1 | 6.2.1 | 6.2.2 | 6.3 | all")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (const char* env = std::getenv("NORMKIT_TOL")) apply_tol_string(env);
        if (!tol_str.empty()) apply_tol_string(tol_str);

        if (*inspect) return cmd_inspect(path);
        if (*aug1) return cmd_augment1(path, y_str, theta_str, coeffs_path, out_path);
        if (*augq) return cmd_augment_quad(path, theta_str, pi_str, m_path, q_path, out_path);
        if (*pert) {
            if (*rank1) return cmd_perturb_rank1(path, theta_str, u_path, out_path);
            if (*rankk) return cmd_perturb_rankk(path, theta_str, h_path, out_path);
            if (*combined) return cmd_perturb_combined(path, part_specs, out_path);
        }
        if (*traj) return cmd_trajectory(path, e_path, tmin, tmax, steps, out_path);
        if (*examples) return cmd_examples(which);
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitIo;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitShape;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertion;
    }
}
