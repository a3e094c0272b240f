// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <variant>

#include <Eigen/Dense>

#include "qscat/errors.hpp"

namespace qscat {

/// Scaling convention used throughout the library: quadratures are
/// x = (a + a^dag)/sqrt(2), p = (a - a^dag)/(i sqrt(2)), so the vacuum
/// quadrature variance equals 1/2 and every covariance entry is dimensionless.
inline constexpr double kVacuumVariance = 0.5;

/// Absolute tolerance for symmetry checks on covariance matrices.
inline constexpr double kSymmetryTol = 1e-12;

/// Tolerance for physicality thresholds and for clamping small negative
/// values produced by floating-point cancellation.
inline constexpr double kPhysicalTol = 1e-9;

// ---------------------------------------------------------------------------
// Input states
// ---------------------------------------------------------------------------

/// Coherent state |amp>. The displacement never enters second moments, so it
/// is carried only for bookkeeping.
struct Coherent {
    std::complex<double> amplitude{0.0, 0.0};
};

/// Single-mode thermal state with mean photon number n_bar >= 0.
struct Thermal {
    double n_bar = 0.0;
};

/// Squeezed vacuum with squeezing parameter r >= 0 and phase theta in [0, 2pi).
struct Squeezed {
    double r = 0.0;
    double theta = 0.0;
};

/// The single occupied input mode of the scattering problem.
using GaussianInput = std::variant<Coherent, Thermal, Squeezed>;

/// Validating factories. `squeezed` normalizes theta into [0, 2pi).
GaussianInput make_coherent(std::complex<double> amplitude);
GaussianInput make_thermal(double n_bar);
GaussianInput make_squeezed(double r, double theta);

/// Centered second moments of the occupied input mode:
///   delta_n  = <a^dag a> - <a^dag><a>        (real, >= 0)
///   delta_aa = <a a> - <a><a>                (complex)
struct SecondMoments {
    double delta_n = 0.0;
    std::complex<double> delta_aa{0.0, 0.0};
};

/// Second moments for each input family:
///   coherent -> (0, 0)
///   thermal  -> (n_bar, 0)
///   squeezed -> (sinh^2 r, -e^{i theta} sinh r cosh r)
SecondMoments input_moments(const GaussianInput& state);

// ---------------------------------------------------------------------------
// Two-mode covariance matrices
// ---------------------------------------------------------------------------

/// 4x4 real symmetric quadrature covariance of an output mode pair, ordered
/// (x_l, p_l, x_m, p_m). Construction rejects asymmetric input (beyond
/// kSymmetryTol) and non-positive diagonals; full physicality is a separate
/// query (validate_physical) because squeezed quadratures legitimately dip
/// below the vacuum variance.
class TwoModeCovariance {
  public:
    explicit TwoModeCovariance(const Eigen::Matrix4d& sigma);

    static TwoModeCovariance from_blocks(const Eigen::Matrix2d& a,
                                         const Eigen::Matrix2d& gamma,
                                         const Eigen::Matrix2d& b);

    const Eigen::Matrix4d& matrix() const noexcept { return sigma_; }

    Eigen::Matrix2d block_a() const { return sigma_.topLeftCorner<2, 2>(); }
    Eigen::Matrix2d block_b() const { return sigma_.bottomRightCorner<2, 2>(); }
    Eigen::Matrix2d block_gamma() const { return sigma_.topRightCorner<2, 2>(); }

  private:
    Eigen::Matrix4d sigma_;
};

/// Canonical four-parameter reduction of a two-mode covariance. The canonical
/// matrix is diag-block [[alpha I, diag(gamma_x, gamma_p)], [., beta I]].
/// Outputs of standard_form satisfy gamma_x >= |gamma_p| with the sign of
/// det(Gamma) carried by gamma_p; the struct itself does not force that
/// ordering so that arbitrary (gamma_x, gamma_p) points can be classified.
struct StandardForm {
    double alpha = 0.5;
    double beta = 0.5;
    double gamma_x = 0.0;
    double gamma_p = 0.0;
};

/// Embeds a standard form as its canonical 4x4 covariance matrix.
TwoModeCovariance to_covariance(const StandardForm& sf);

/// The four local-symplectic invariants of a two-mode covariance.
struct CovarianceInvariants {
    double det_a = 0.0;
    double det_b = 0.0;
    double det_gamma = 0.0;
    double det_sigma = 0.0;
};

CovarianceInvariants invariants(const TwoModeCovariance& sigma);

/// Closed-form invariants of a standard form:
///   det A = alpha^2, det B = beta^2, det Gamma = gamma_x gamma_p,
///   det sigma = (alpha beta - gamma_x^2)(alpha beta - gamma_p^2).
CovarianceInvariants invariants(const StandardForm& sf);

/// Reduces a physical covariance to standard form. alpha = sqrt(det A),
/// beta = sqrt(det B); gamma_x, gamma_p are recovered as the singular values
/// of the cross block after each mode is brought to its Williamson frame,
/// which keeps all four invariants and is exact for degenerate cross blocks.
/// Throws NonPhysicalInput when the block determinants are not positive.
StandardForm standard_form(const TwoModeCovariance& sigma);

/// True iff sigma is a valid quantum covariance: positive semidefinite and
/// smaller symplectic eigenvalue >= 1/2 - kPhysicalTol.
bool validate_physical(const TwoModeCovariance& sigma);

} // namespace qscat
