// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "qscat/gaussian.hpp"

namespace qscat {

/// Ordered pair of symplectic eigenvalues, eta_plus >= eta_minus >= 0.
struct SymplecticPair {
    SymplecticPair(double plus, double minus);

    double eta_plus;
    double eta_minus;
};

/// Boundary test eta >= 1/2 - tolerance shared by the physicality and
/// separability criteria. States produced from a single occupied input mode
/// sit exactly on the eta = 1/2 boundary, and the cancellation error of the
/// invariant route grows with Delta = det A + det B + 2 det Gamma, so the
/// tolerance scales with |Delta| (reducing to the plain 1e-9 rule for
/// order-one states).
inline bool meets_vacuum_floor(double eta, double delta) {
    const double scale = std::abs(delta) > 1.0 ? std::abs(delta) : 1.0;
    return eta >= kVacuumVariance - kPhysicalTol * scale;
}

/// Symplectic eigenvalues from the invariants of a symmetric 4x4 covariance:
///   Delta = det A + det B + 2 det Gamma,
///   eta^2 = (Delta +- sqrt(Delta^2 - 4 det sigma)) / 2.
/// Small negative discriminants from cancellation are clamped to zero
/// (tolerance scales with Delta^2 so large thermal states stay admissible);
/// anything stronger throws NegativeDiscriminant.
SymplecticPair symplectic_eigenvalues(const CovarianceInvariants& inv);

/// Cancellation-free route for canonical parameters. The discriminant
/// factorizes exactly as
///   Delta^2 - 4 det sigma
///     = (alpha^2 - beta^2)^2
///       + 4 (alpha gamma_x + beta gamma_p)(alpha gamma_p + beta gamma_x),
/// so pure states (where the generic expression cancels catastrophically)
/// come out at eta = 1/2 to machine precision.
SymplecticPair symplectic_eigenvalues(const StandardForm& sf);

struct SeparabilityResult {
    bool separable;
    double eta_tilde_minus; ///< smaller symplectic eigenvalue after partial transpose
};

/// Partial-transpose separability test. The transpose of one mode flips the
/// sign of gamma_p, so the primed invariants are det Gamma' = -gamma_x gamma_p
/// with det sigma unchanged; the state is separable iff the resulting smaller
/// symplectic eigenvalue stays >= 1/2 - kPhysicalTol.
SeparabilityResult is_separable(const StandardForm& sf);

/// Normalized intensity-fluctuation correlation between the two modes,
///   C = 1 + 2(gamma_x^2 + gamma_p^2) / ((2 alpha - 1)(2 beta - 1)).
/// The 0/0 limit at the coherent point returns 1 by convention; a vanishing
/// denominator with a finite numerator throws DivergentCorrelation.
double intensity_correlation(const StandardForm& sf);

/// Bosonic entropy contribution of one symplectic eigenvalue,
///   kappa(z) = (z + 1/2) ln(z + 1/2) - (z - 1/2) ln(z - 1/2),
/// with kappa(1/2) = 0 as the continuous limit. Inputs within kPhysicalTol
/// below 1/2 are clamped; anything lower throws OutOfDomain. This is the
/// standard (positive) entropy function: kappa(z) >= 0 and thermal states get
/// positive entropy.
double kappa(double z);

/// Von Neumann entropy of the two-mode state: kappa(eta+) + kappa(eta-) with
/// the eigenvalues of the unprimed covariance.
double entropy(const TwoModeCovariance& sigma);

/// Which mode of the pair the Gaussian measurement is performed on.
enum class MeasuredMode { First, Second };

/// Gaussian discord of the pair with the measurement on the selected mode.
/// With the measured mode's parameters in the B slot (swap alpha/beta when
/// measuring the first mode):
///   D_G = kappa(beta) - kappa(eta-) - kappa(eta+)
///         + kappa((alpha + 2 alpha beta + 2 gamma_x gamma_p) / (1 + 2 beta)),
/// where eta+- belong to the unprimed covariance. Residual negatives within
/// kPhysicalTol are clamped to zero. D_G vanishes iff the cross block is zero.
double gaussian_discord(const StandardForm& sf, MeasuredMode measured);

/// Largest intensity correlation reachable by squeezed-input entangled
/// output pairs: 2 + (t_l^2 + t_m^2) / (2 n_bar t_l t_m). Always
/// >= 2 + 1/n_bar, with equality at t_l == t_m (exact in floating point).
/// Throws OutOfDomain on non-positive arguments.
double max_squeezed_correlation(double n_bar, double t_l, double t_m);

/// Bundle of every measure for one output pair.
struct CorrelationReport {
    double c_value = 1.0;
    bool physical = true;
    bool separable = true;
    double eta_tilde_minus = 0.5;
    double discord_measured_on_l = 0.0;
    double discord_measured_on_m = 0.0;
};

/// Full analysis of one output covariance (standard form, correlation,
/// separability, both discord orientations).
CorrelationReport analyze_pair(const TwoModeCovariance& sigma);

} // namespace qscat
