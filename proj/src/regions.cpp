// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#include "qscat/regions.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace qscat {

namespace {

void require_spec(const RegionSpec& spec) {
    if (!(spec.alpha >= kVacuumVariance) || !(spec.beta >= kVacuumVariance)) {
        throw OutOfDomain("region map requires alpha, beta >= 1/2");
    }
    if (spec.resolution < 2) {
        throw OutOfRange("region resolution must be >= 2");
    }
    if (spec.extent < 0.0 || !std::isfinite(spec.extent)) {
        throw OutOfRange("region extent must be finite and non-negative");
    }
}

double effective_extent(const RegionSpec& spec) {
    if (spec.extent > 0.0) {
        return spec.extent;
    }
    // |gamma| < sqrt(alpha beta) is necessary for det sigma > 0, so this
    // default always encloses the physical region.
    return 1.05 * std::sqrt(spec.alpha * spec.beta);
}

RegionCell fill_cell(const RegionSpec& spec, double gx, double gp) {
    RegionCell cell{classify(spec.alpha, spec.beta, gx, gp), 0.0};
    try {
        cell.c_value = intensity_correlation({spec.alpha, spec.beta, gx, gp});
    } catch (const DivergentCorrelation&) {
        cell.c_value = std::numeric_limits<double>::infinity();
    }
    return cell;
}

} // namespace

const char* to_string(StateClass c) noexcept {
    switch (c) {
    case StateClass::Unphysical: return "Unphysical";
    case StateClass::Separable: return "Separable";
    case StateClass::Entangled: return "Entangled";
    }
    return "Unknown";
}

StateClass classify(double alpha, double beta, double gamma_x, double gamma_p) {
    if (!(alpha >= kVacuumVariance) || !(beta >= kVacuumVariance)) {
        throw OutOfDomain("classification requires alpha, beta >= 1/2");
    }
    const StandardForm sf{alpha, beta, gamma_x, gamma_p};
    if (!validate_physical(to_covariance(sf))) {
        return StateClass::Unphysical;
    }
    return is_separable(sf).separable ? StateClass::Separable
                                      : StateClass::Entangled;
}

double c2_circle_radius(double alpha, double beta) {
    if (!(alpha >= kVacuumVariance) || !(beta >= kVacuumVariance)) {
        throw OutOfDomain("circle radius requires alpha, beta >= 1/2");
    }
    return std::sqrt(0.5 * (2.0 * alpha - 1.0) * (2.0 * beta - 1.0));
}

RegionGrid::RegionGrid(const RegionSpec& spec, std::vector<double> coords,
                       std::vector<RegionCell> cells)
    : spec_(spec), coords_(std::move(coords)), cells_(std::move(cells)) {}

namespace {

/// Grid coordinates over [-extent, extent], exactly antisymmetric about the
/// center (coords[n-1-i] == -coords[i]); odd resolutions hit 0 exactly.
std::vector<double> grid_coords(int resolution, double extent) {
    std::vector<double> coords(static_cast<std::size_t>(resolution));
    const int last = resolution - 1;
    for (int i = 0; 2 * i <= last; ++i) {
        if (2 * i == last) {
            coords[static_cast<std::size_t>(i)] = 0.0;
            break;
        }
        const double v = extent * (2.0 * static_cast<double>(i) / static_cast<double>(last) - 1.0);
        coords[static_cast<std::size_t>(i)] = v;
        coords[static_cast<std::size_t>(last - i)] = -v;
    }
    return coords;
}

template <bool Parallel>
RegionGrid fill_map(const RegionSpec& spec) {
    require_spec(spec);
    RegionSpec resolved = spec;
    resolved.extent = effective_extent(spec);

    const int n = resolved.resolution;
    std::vector<double> coords = grid_coords(n, resolved.extent);
    std::vector<RegionCell> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));

    if constexpr (Parallel) {
#pragma omp parallel for collapse(2) schedule(static)
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] =
                    fill_cell(resolved, coords[static_cast<std::size_t>(i)],
                              coords[static_cast<std::size_t>(j)]);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cells[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] =
                    fill_cell(resolved, coords[static_cast<std::size_t>(i)],
                              coords[static_cast<std::size_t>(j)]);
            }
        }
    }
    return RegionGrid(resolved, std::move(coords), std::move(cells));
}

} // namespace

RegionGrid region_map(const RegionSpec& spec) { return fill_map<true>(spec); }

RegionGrid region_map_serial(const RegionSpec& spec) { return fill_map<false>(spec); }

} // namespace qscat
