// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#include "qscat/scatter.hpp"

#include <cmath>
#include <random>
#include <utility>

namespace qscat {

ScatteringMatrix::ScatteringMatrix(Eigen::MatrixXcd s) : s_(std::move(s)) {
    if (s_.rows() < 1 || s_.rows() != s_.cols()) {
        throw InvalidDimension("scattering matrix must be square and non-empty");
    }
    const double residual =
        (s_.adjoint() * s_ - Eigen::MatrixXcd::Identity(s_.rows(), s_.cols()))
            .cwiseAbs()
            .maxCoeff();
    if (!(residual < kUnitarityTol)) {
        throw NonPhysicalInput("scattering matrix is not unitary");
    }
}

double ScatteringMatrix::unitarity_residual() const {
    return (s_.adjoint() * s_ - Eigen::MatrixXcd::Identity(s_.rows(), s_.cols()))
        .cwiseAbs()
        .maxCoeff();
}

ScatteringMatrix haar_random(int dimension, std::uint64_t seed) {
    if (dimension < 1) {
        throw InvalidDimension("channel count must be >= 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    Eigen::MatrixXcd g(dimension, dimension);
    for (int i = 0; i < dimension; ++i) {
        for (int j = 0; j < dimension; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = std::complex<double>(re, im);
        }
    }

    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();

    // Rotate each column by the phase of R's diagonal; without this the raw
    // QR factor is not Haar-distributed.
    const Eigen::MatrixXcd& qr_matrix = qr.matrixQR();
    for (int j = 0; j < dimension; ++j) {
        const std::complex<double> r = qr_matrix(j, j);
        const double mod = std::abs(r);
        q.col(j) *= mod > 0.0 ? r / mod : std::complex<double>(1.0, 0.0);
    }
    return ScatteringMatrix(std::move(q));
}

ModePair::ModePair(int k_prime_in, int l_in, int m_in)
    : k_prime(k_prime_in), l(l_in), m(m_in) {
    if (k_prime < 0 || l < 0 || m < 0) {
        throw IndexOutOfRange("mode indices must be non-negative");
    }
    if (l == m) {
        throw IndexOutOfRange("output modes must be distinct");
    }
}

TwoModeCovariance output_covariance(const GaussianInput& state,
                                    const ScatteringMatrix& s,
                                    const ModePair& pair) {
    const int n = s.dimension();
    if (pair.k_prime >= n || pair.l >= n || pair.m >= n) {
        throw IndexOutOfRange("mode index exceeds channel count");
    }

    const double t_l = std::abs(s.matrix()(pair.l, pair.k_prime));
    const double t_m = std::abs(s.matrix()(pair.m, pair.k_prime));
    const SecondMoments moments = input_moments(state);

    const double w_plus = moments.delta_n + moments.delta_aa.real();
    const double w_minus = moments.delta_n - moments.delta_aa.real();
    const double w_cross = moments.delta_aa.imag();

    auto block = [&](double ta, double tb, double vacuum) {
        const double scale = ta * tb;
        Eigen::Matrix2d blk;
        blk << vacuum + scale * w_plus, scale * w_cross,
               scale * w_cross, vacuum + scale * w_minus;
        return blk;
    };

    return TwoModeCovariance::from_blocks(block(t_l, t_l, kVacuumVariance),
                                          block(t_l, t_m, 0.0),
                                          block(t_m, t_m, kVacuumVariance));
}

StandardForm thermal_covariance(double n_bar, double t_l, double t_m) {
    if (!(n_bar >= 0.0)) {
        throw OutOfRange("thermal mean photon number must be >= 0");
    }
    if (!(t_l >= 0.0 && t_l <= 1.0) || !(t_m >= 0.0 && t_m <= 1.0)) {
        throw OutOfRange("transmission moduli must lie in [0, 1]");
    }
    const double gamma = n_bar * t_l * t_m;
    return {n_bar * t_l * t_l + kVacuumVariance,
            n_bar * t_m * t_m + kVacuumVariance, gamma, gamma};
}

} // namespace qscat
