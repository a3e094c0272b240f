// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qscat/ensemble.hpp"
#include "qscat/regions.hpp"

namespace qscat {

/// Discord surface over the transmission-modulus square (t_l, t_m), the
/// thermal-input figure data. The grid spans [0.01, 1] per axis; when
/// physical_only is set, cells with t_l^2 + t_m^2 > 1 (unreachable for a
/// single unitary column) are masked out of the serialized output.
struct SurfaceSpec {
    double n_bar = 1.0;
    int resolution = 101;
    bool physical_only = false;
};

class SurfaceGrid {
  public:
    SurfaceGrid(const SurfaceSpec& spec, std::vector<double> t,
                std::vector<double> discord, std::vector<unsigned char> included);

    const SurfaceSpec& spec() const noexcept { return spec_; }
    int resolution() const noexcept { return spec_.resolution; }
    double t(int i) const { return t_[static_cast<std::size_t>(i)]; }
    /// Discord measured on mode l at cell (i = t_l index, j = t_m index).
    double discord(int i, int j) const { return discord_[index(i, j)]; }
    bool included(int i, int j) const { return included_[index(i, j)] != 0; }

  private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(spec_.resolution) +
               static_cast<std::size_t>(j);
    }
    SurfaceSpec spec_;
    std::vector<double> t_;
    std::vector<double> discord_;
    std::vector<unsigned char> included_;
};

SurfaceGrid discord_surface(const SurfaceSpec& spec);
SurfaceGrid discord_surface_serial(const SurfaceSpec& spec);

// ---------------------------------------------------------------------------
// Serialization. CSV: header row, comma separators, line-feed terminators,
// floating point rendered with 12 significant digits, locale-independent.
// JSON carries the same fields rounded to the same 12 significant digits.
// ---------------------------------------------------------------------------

/// Renders v with 12 significant digits (shortest general form).
std::string format_value(double v);

enum class OutputFormat { Csv, Json };

void write_report(std::ostream& out, const CorrelationReport& report, OutputFormat format);
void write_region(std::ostream& out, const RegionGrid& grid, OutputFormat format);
void write_surface(std::ostream& out, const SurfaceGrid& grid, OutputFormat format);
void write_sweep(std::ostream& out, const std::vector<SweepPoint>& rows, OutputFormat format);

} // namespace qscat
