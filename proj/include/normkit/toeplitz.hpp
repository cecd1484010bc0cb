#pragma once

#include "normkit/types.hpp"

#include <optional>
#include <utility>

namespace normkit {

/// Unimodular complex number; the constructor normalizes its argument.
class Unimodular {
  public:
    Unimodular() : value_(1.0, 0.0) {}
    explicit Unimodular(Complex z);

    Complex value() const { return value_; }
    Complex conj() const { return std::conj(value_); }

    /// Representative with argument in [0, pi): theta and -theta define the
    /// same line, so this picks a unique one of the pair.
    Unimodular canonical() const;

    Unimodular operator-() const { return Unimodular(-value_); }

  private:
    Complex value_;
};

/// A = herm + skew, where conj(theta)*herm is Hermitian and
/// conj(theta)*skew is skew-Hermitian.
struct ThetaDecomposition {
    Unimodular theta;
    CMatrix herm;
    CMatrix skew;
};

struct EssentiallyHermitianCert {
    Unimodular theta;
    Complex alpha;
    CMatrix hmatrix;  // Hermitian, A = theta*hmatrix + alpha*I
};

/// Scalar split z = Re(conj(theta) z) theta + i Im(conj(theta) z) theta.
std::pair<Complex, Complex> theta_split_scalar(Complex z, const Unimodular& theta);

Complex theta_part(Complex z, const Unimodular& theta);
Complex theta_perp_part(Complex z, const Unimodular& theta);

ThetaDecomposition theta_split(const CMatrix& a, const Unimodular& theta);

/// The theta-Hermitian part alone.
CMatrix theta_part(const CMatrix& a, const Unimodular& theta);
CMatrix theta_perp_part(const CMatrix& a, const Unimodular& theta);

bool is_theta_hermitian(const CMatrix& a, const Unimodular& theta, const Tolerance& tol = {});

/// If the spectrum of the normal matrix A is collinear, returns theta (line
/// direction, canonical), alpha (point of the line closest to the origin) and
/// Hermitian H with A = theta*H + alpha*I. Otherwise nullopt.
std::optional<EssentiallyHermitianCert> essentially_hermitian(const CMatrix& a,
                                                              const Tolerance& tol = {});

}  // namespace normkit
