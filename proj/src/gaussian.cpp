// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#include "qscat/gaussian.hpp"

#include <cmath>

#include "qscat/measures.hpp"

namespace qscat {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double det2(const Eigen::Matrix2d& m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Inverse square root of the mode block rescaled to determinant one,
/// i.e. S = (A / alpha)^{-1/2} with alpha = sqrt(det A). Closed form from
/// Cayley-Hamilton: S = adj(A + alpha I) / sqrt(alpha (tr A + 2 alpha)).
/// S is the local symplectic bringing the block to its Williamson frame,
/// S A S^T = alpha I.
Eigen::Matrix2d williamson_normalizer(const Eigen::Matrix2d& a, double alpha) {
    const double denom2 = alpha * (a(0, 0) + a(1, 1) + 2.0 * alpha);
    if (!(denom2 > 0.0)) {
        throw NonPhysicalInput("mode block is not positive definite");
    }
    const double inv = 1.0 / std::sqrt(denom2);
    Eigen::Matrix2d s;
    s << (a(1, 1) + alpha) * inv, -a(0, 1) * inv,
         -a(1, 0) * inv, (a(0, 0) + alpha) * inv;
    return s;
}

/// Singular values of a real 2x2 matrix by the rotation/hypot identity.
/// Exact (bit-for-bit equal pair) for scalar multiples of the identity,
/// which keeps degenerate cross blocks degenerate.
void singular_values_2x2(const Eigen::Matrix2d& m, double& s_max, double& s_min) {
    const double q1 = std::hypot(m(0, 0) + m(1, 1), m(0, 1) - m(1, 0));
    const double q2 = std::hypot(m(0, 0) - m(1, 1), m(0, 1) + m(1, 0));
    s_max = 0.5 * (q1 + q2);
    s_min = 0.5 * std::abs(q1 - q2);
}

} // namespace

GaussianInput make_coherent(std::complex<double> amplitude) {
    return Coherent{amplitude};
}

GaussianInput make_thermal(double n_bar) {
    if (!(n_bar >= 0.0)) {
        throw OutOfRange("thermal mean photon number must be >= 0");
    }
    return Thermal{n_bar};
}

GaussianInput make_squeezed(double r, double theta) {
    if (!(r >= 0.0)) {
        throw OutOfRange("squeezing parameter must be >= 0");
    }
    if (!std::isfinite(theta)) {
        throw OutOfRange("squeezing phase must be finite");
    }
    double phase = std::fmod(theta, kTwoPi);
    if (phase < 0.0) {
        phase += kTwoPi;
    }
    return Squeezed{r, phase};
}

SecondMoments input_moments(const GaussianInput& state) {
    return std::visit(
        [](const auto& s) -> SecondMoments {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Coherent>) {
                return {0.0, {0.0, 0.0}};
            } else if constexpr (std::is_same_v<T, Thermal>) {
                return {s.n_bar, {0.0, 0.0}};
            } else {
                const double sh = std::sinh(s.r);
                const double ch = std::cosh(s.r);
                const std::complex<double> phase{std::cos(s.theta), std::sin(s.theta)};
                return {sh * sh, -phase * sh * ch};
            }
        },
        state);
}

TwoModeCovariance::TwoModeCovariance(const Eigen::Matrix4d& sigma) : sigma_(sigma) {
    const double asym = (sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff();
    if (!(asym <= kSymmetryTol)) {
        throw NonPhysicalInput("covariance matrix is not symmetric");
    }
    for (int i = 0; i < 4; ++i) {
        if (!(sigma_(i, i) > 0.0)) {
            throw NonPhysicalInput("covariance diagonal must be positive");
        }
    }
}

TwoModeCovariance TwoModeCovariance::from_blocks(const Eigen::Matrix2d& a,
                                                 const Eigen::Matrix2d& gamma,
                                                 const Eigen::Matrix2d& b) {
    Eigen::Matrix4d sigma;
    sigma.topLeftCorner<2, 2>() = a;
    sigma.topRightCorner<2, 2>() = gamma;
    sigma.bottomLeftCorner<2, 2>() = gamma.transpose();
    sigma.bottomRightCorner<2, 2>() = b;
    return TwoModeCovariance(sigma);
}

TwoModeCovariance to_covariance(const StandardForm& sf) {
    Eigen::Matrix4d sigma;
    sigma << sf.alpha, 0.0, sf.gamma_x, 0.0,
             0.0, sf.alpha, 0.0, sf.gamma_p,
             sf.gamma_x, 0.0, sf.beta, 0.0,
             0.0, sf.gamma_p, 0.0, sf.beta;
    return TwoModeCovariance(sigma);
}

CovarianceInvariants invariants(const TwoModeCovariance& sigma) {
    return {det2(sigma.block_a()), det2(sigma.block_b()),
            det2(sigma.block_gamma()), sigma.matrix().determinant()};
}

CovarianceInvariants invariants(const StandardForm& sf) {
    const double ab = sf.alpha * sf.beta;
    return {sf.alpha * sf.alpha, sf.beta * sf.beta, sf.gamma_x * sf.gamma_p,
            (ab - sf.gamma_x * sf.gamma_x) * (ab - sf.gamma_p * sf.gamma_p)};
}

StandardForm standard_form(const TwoModeCovariance& sigma) {
    const Eigen::Matrix2d a = sigma.block_a();
    const Eigen::Matrix2d b = sigma.block_b();

    const double det_a = det2(a);
    const double det_b = det2(b);
    if (!(det_a > 0.0) || !(det_b > 0.0)) {
        throw NonPhysicalInput("mode block determinant is not positive");
    }
    const double alpha = std::sqrt(det_a);
    const double beta = std::sqrt(det_b);

    // Bring both modes to their Williamson frames; the cross block then
    // carries all correlations and its singular values are the canonical
    // (gamma_x, |gamma_p|), with the sign of det Gamma on gamma_p.
    const Eigen::Matrix2d sa = williamson_normalizer(a, alpha);
    const Eigen::Matrix2d sb = williamson_normalizer(b, beta);
    const Eigen::Matrix2d cross = sa * sigma.block_gamma() * sb.transpose();

    double gamma_x = 0.0;
    double gamma_min = 0.0;
    singular_values_2x2(cross, gamma_x, gamma_min);
    const double gamma_p = det2(cross) < 0.0 ? -gamma_min : gamma_min;

    return {alpha, beta, gamma_x, gamma_p};
}

bool validate_physical(const TwoModeCovariance& sigma) {
    // The defining condition sigma + (i/2) Omega >= 0 as a Hermitian
    // eigenproblem. Equivalent to positive semidefiniteness together with
    // eta_minus >= 1/2, but with error linear in machine epsilon even for
    // pure states, where the symplectic discriminant cancels.
    Eigen::Matrix4cd h = sigma.matrix().cast<std::complex<double>>();
    const std::complex<double> half_i(0.0, 0.5);
    h(0, 1) += half_i;
    h(1, 0) -= half_i;
    h(2, 3) += half_i;
    h(3, 2) -= half_i;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(h, Eigen::EigenvaluesOnly);
    const double scale = std::max(1.0, sigma.matrix().cwiseAbs().maxCoeff());
    return es.eigenvalues().minCoeff() >= -kPhysicalTol * scale;
}

} // namespace qscat
