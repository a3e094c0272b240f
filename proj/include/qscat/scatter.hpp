// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "qscat/gaussian.hpp"

namespace qscat {

/// Maximum allowed unitarity residual ||S^dag S - I||_max on construction.
inline constexpr double kUnitarityTol = 1e-10;

/// N x N complex unitary linking input mode operators to output mode
/// operators; entries are the complex transmission coefficients. Indices are
/// 0-based.
class ScatteringMatrix {
  public:
    /// Validates unitarity to kUnitarityTol; throws NonPhysicalInput.
    explicit ScatteringMatrix(Eigen::MatrixXcd s);

    int dimension() const noexcept { return static_cast<int>(s_.rows()); }
    const Eigen::MatrixXcd& matrix() const noexcept { return s_; }

    /// ||S^dag S - I||_max
    double unitarity_residual() const;

  private:
    Eigen::MatrixXcd s_;
};

/// Draws a unitary from the circular unitary (Haar) ensemble: fill with
/// independent standard complex normal entries, QR-factorize, and rotate each
/// column by the phase of the corresponding diagonal entry of R so the
/// distribution is exactly Haar. Deterministic for a fixed seed.
/// Throws InvalidDimension when dimension < 1.
ScatteringMatrix haar_random(int dimension, std::uint64_t seed);

/// Selects the occupied input channel k' and a pair of distinct output
/// channels (l, m). All indices 0-based; l == m is rejected.
struct ModePair {
    ModePair(int k_prime_in, int l_in, int m_in);

    int k_prime;
    int l;
    int m;
};

/// Two-mode output covariance for the given input state, scattering matrix
/// and mode pair.
///
/// Each output mode's quadratures are referenced to the phase of its own
/// transmission coefficient S_{l,k'} (a local rotation, invisible to every
/// correlation measure), so only the moduli |S_{l,k'}|, |S_{m,k'}| enter.
/// With moments (dn, daa) of the occupied input mode the blocks read
///
///   A     = 1/2 I + |S_l|^2 G,   B = 1/2 I + |S_m|^2 G,
///   Gamma = |S_l||S_m| G,        G = [[dn + Re daa, Im daa],
///                                     [Im daa,      dn - Re daa]].
///
/// The result is always a physical covariance. Throws IndexOutOfRange when
/// the pair indices do not fit the matrix.
TwoModeCovariance output_covariance(const GaussianInput& state,
                                    const ScatteringMatrix& s,
                                    const ModePair& pair);

/// Standard form of the thermal output state with mean photon number n_bar
/// and transmission moduli t_l, t_m in [0, 1]:
///   (n t_l^2 + 1/2, n t_m^2 + 1/2, n t_l t_m, n t_l t_m).
/// gamma_x == gamma_p always, so these states are never entangled.
/// Throws OutOfRange on arguments outside their domain.
StandardForm thermal_covariance(double n_bar, double t_l, double t_m);

} // namespace qscat
