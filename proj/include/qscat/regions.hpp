// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "qscat/measures.hpp"

namespace qscat {

enum class StateClass { Unphysical, Separable, Entangled };

const char* to_string(StateClass c) noexcept;

/// Classifies the canonical two-mode state (alpha, beta, gamma_x, gamma_p).
/// Boundary states within kPhysicalTol are classified on the non-strict side
/// (physical / separable). Throws OutOfDomain when alpha or beta < 1/2.
StateClass classify(double alpha, double beta, double gamma_x, double gamma_p);

/// Radius of the C = 2 circle in the (gamma_x, gamma_p) plane:
/// sqrt((2 alpha - 1)(2 beta - 1) / 2); degenerates to 0 at alpha or beta = 1/2.
double c2_circle_radius(double alpha, double beta);

/// Grid request for a classification map. extent <= 0 selects the default
/// 1.05 * sqrt(alpha * beta), which always encloses the physical region.
struct RegionSpec {
    double alpha = 0.75;
    double beta = 0.75;
    int resolution = 201;
    double extent = 0.0;
};

struct RegionCell {
    StateClass state_class;
    double c_value; ///< +infinity marks a divergent correlation
};

/// Filled classification map. Cells are stored row-major with the gamma_x
/// index outermost; coordinates are exactly antisymmetric about 0 (and the
/// midpoint of an odd grid is exactly 0).
class RegionGrid {
  public:
    RegionGrid(const RegionSpec& spec, std::vector<double> coords,
               std::vector<RegionCell> cells);

    const RegionSpec& spec() const noexcept { return spec_; }
    int resolution() const noexcept { return spec_.resolution; }
    double gamma_x(int i) const { return coords_[static_cast<std::size_t>(i)]; }
    double gamma_p(int j) const { return coords_[static_cast<std::size_t>(j)]; }
    const RegionCell& at(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * static_cast<std::size_t>(spec_.resolution) +
                      static_cast<std::size_t>(j)];
    }
    const std::vector<RegionCell>& cells() const noexcept { return cells_; }

  private:
    RegionSpec spec_;
    std::vector<double> coords_;
    std::vector<RegionCell> cells_;
};

/// Fills the map (parallel over cells when OpenMP is enabled; output is
/// schedule-independent).
RegionGrid region_map(const RegionSpec& spec);

/// Serial reference implementation with identical output.
RegionGrid region_map_serial(const RegionSpec& spec);

} // namespace qscat
