#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace normkit {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Tolerance bundle shared by all predicates and decompositions.
struct Tolerance {
    double rel_normality = 1e-10;  // relative commutator defect for normality tests
    double collinearity = 1e-8;    // line membership of eigenvalues
    double eig_residual = 1e-10;   // eigensolver reconstruction residual
};

// Dimension or argument-count mismatch.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A mathematical precondition (normality, Hermicity, commutation) is violated.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The requested construction does not exist for the given data.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An iterative procedure failed to reach its accuracy target.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require_square(const CMatrix& a, const char* who) {
    if (a.rows() != a.cols())
        throw ShapeError(std::string(who) + ": matrix must be square, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
}

inline void require_same_shape(const CMatrix& a, const CMatrix& b, const char* who) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(who) + ": shape mismatch");
}

}  // namespace normkit
