// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#include "qscat/measures.hpp"

#include <algorithm>
#include <cmath>

namespace qscat {

namespace {

void require_standard_domain(const StandardForm& sf) {
    if (!(sf.alpha >= kVacuumVariance - kPhysicalTol) ||
        !(sf.beta >= kVacuumVariance - kPhysicalTol)) {
        throw OutOfDomain("standard form requires alpha, beta >= 1/2");
    }
}

/// eta^2 = (delta +- sqrt(disc)) / 2 with cancellation residue clamped away;
/// the clamp windows scale with the invariant magnitude.
SymplecticPair eta_pair(double delta, double disc) {
    if (disc < 0.0) {
        if (disc < -kPhysicalTol * std::max(1.0, delta * delta)) {
            throw NegativeDiscriminant("symplectic discriminant is negative");
        }
        disc = 0.0;
    }
    const double root = std::sqrt(disc);
    const double eta_scale = std::max(1.0, std::abs(delta));
    auto eta = [&](double signed_root) {
        double sq = 0.5 * (delta + signed_root);
        if (sq < 0.0) {
            if (sq < -kPhysicalTol * eta_scale) {
                throw NegativeDiscriminant("squared symplectic eigenvalue is negative");
            }
            sq = 0.0;
        }
        return std::sqrt(sq);
    };
    return {eta(root), eta(-root)};
}

} // namespace

SymplecticPair::SymplecticPair(double plus, double minus)
    : eta_plus(std::max(plus, minus)), eta_minus(std::min(plus, minus)) {}

SymplecticPair symplectic_eigenvalues(const CovarianceInvariants& inv) {
    const double delta = inv.det_a + inv.det_b + 2.0 * inv.det_gamma;
    return eta_pair(delta, delta * delta - 4.0 * inv.det_sigma);
}

SymplecticPair symplectic_eigenvalues(const StandardForm& sf) {
    const double delta = sf.alpha * sf.alpha + sf.beta * sf.beta +
                         2.0 * sf.gamma_x * sf.gamma_p;
    const double asym = sf.alpha * sf.alpha - sf.beta * sf.beta;
    const double disc = asym * asym +
                        4.0 * (sf.alpha * sf.gamma_x + sf.beta * sf.gamma_p) *
                            (sf.alpha * sf.gamma_p + sf.beta * sf.gamma_x);
    return eta_pair(delta, disc);
}

SeparabilityResult is_separable(const StandardForm& sf) {
    require_standard_domain(sf);
    // partial transpose flips the sign of gamma_p
    const StandardForm primed{sf.alpha, sf.beta, sf.gamma_x, -sf.gamma_p};
    const SymplecticPair pair = symplectic_eigenvalues(primed);
    const double delta = primed.alpha * primed.alpha + primed.beta * primed.beta +
                         2.0 * primed.gamma_x * primed.gamma_p;
    return {meets_vacuum_floor(pair.eta_minus, delta), pair.eta_minus};
}

double intensity_correlation(const StandardForm& sf) {
    require_standard_domain(sf);
    const double numerator =
        2.0 * (sf.gamma_x * sf.gamma_x + sf.gamma_p * sf.gamma_p);
    const double denominator = (2.0 * sf.alpha - 1.0) * (2.0 * sf.beta - 1.0);
    if (denominator < 1e-15) {
        if (numerator < 1e-15) {
            return 1.0; // coherent-point 0/0 limit
        }
        throw DivergentCorrelation("vanishing intensity fluctuations with finite cross correlations");
    }
    return 1.0 + numerator / denominator;
}

double kappa(double z) {
    if (z < kVacuumVariance - kPhysicalTol) {
        throw OutOfDomain("kappa requires z >= 1/2");
    }
    z = std::max(z, kVacuumVariance);
    const double zp = z + 0.5;
    const double zm = z - 0.5;
    const double tail = zm > 0.0 ? zm * std::log(zm) : 0.0;
    return zp * std::log(zp) - tail;
}

double entropy(const TwoModeCovariance& sigma) {
    // reduce first: the canonical route keeps pure states at eta = 1/2 instead
    // of amplifying determinant cancellation through the discriminant
    const SymplecticPair pair = symplectic_eigenvalues(standard_form(sigma));
    return kappa(pair.eta_plus) + kappa(pair.eta_minus);
}

double gaussian_discord(const StandardForm& sf, MeasuredMode measured) {
    require_standard_domain(sf);
    double unmeasured = sf.alpha;
    double meas = sf.beta;
    if (measured == MeasuredMode::First) {
        std::swap(unmeasured, meas);
    }

    const SymplecticPair pair = symplectic_eigenvalues(sf);
    const double conditional =
        (unmeasured + 2.0 * unmeasured * meas + 2.0 * sf.gamma_x * sf.gamma_p) /
        (1.0 + 2.0 * meas);

    double d = kappa(meas) - kappa(pair.eta_minus) - kappa(pair.eta_plus) +
               kappa(conditional);
    if (d < 0.0 && d >= -kPhysicalTol) {
        d = 0.0;
    }
    return d;
}

double max_squeezed_correlation(double n_bar, double t_l, double t_m) {
    if (!(n_bar > 0.0) || !(t_l > 0.0) || !(t_m > 0.0)) {
        throw OutOfDomain("max_squeezed_correlation requires positive arguments");
    }
    // (t_l^2 + t_m^2) / (2 n t_l t_m) arranged so that t_l == t_m yields
    // exactly 2 + 1/n_bar.
    return 2.0 + (t_l / t_m + t_m / t_l) / (2.0 * n_bar);
}

CorrelationReport analyze_pair(const TwoModeCovariance& sigma) {
    CorrelationReport report;
    report.physical = validate_physical(sigma);
    const StandardForm sf = standard_form(sigma);
    report.c_value = intensity_correlation(sf);
    const SeparabilityResult sep = is_separable(sf);
    report.separable = sep.separable;
    report.eta_tilde_minus = sep.eta_tilde_minus;
    report.discord_measured_on_l = gaussian_discord(sf, MeasuredMode::First);
    report.discord_measured_on_m = gaussian_discord(sf, MeasuredMode::Second);
    return report;
}

} // namespace qscat
