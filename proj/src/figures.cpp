// Copyright 2026 The qscat developers
// SPDX-License-Identifier: Apache-2.0

#include "qscat/figures.hpp"

#include <charconv>
#include <cstdlib>
#include <utility>

#include <json.hpp>

namespace qscat {

namespace {

constexpr double kSurfaceMin = 0.01;

std::vector<double> surface_axis(int resolution) {
    std::vector<double> t(static_cast<std::size_t>(resolution));
    const double span = 1.0 - kSurfaceMin;
    for (int i = 0; i < resolution; ++i) {
        t[static_cast<std::size_t>(i)] =
            kSurfaceMin + span * static_cast<double>(i) / static_cast<double>(resolution - 1);
    }
    return t;
}

void require_surface(const SurfaceSpec& spec) {
    if (!(spec.n_bar >= 0.0)) {
        throw OutOfRange("thermal mean photon number must be >= 0");
    }
    if (spec.resolution < 2) {
        throw OutOfRange("surface resolution must be >= 2");
    }
}

template <bool Parallel>
SurfaceGrid fill_surface(const SurfaceSpec& spec) {
    require_surface(spec);
    const int n = spec.resolution;
    std::vector<double> t = surface_axis(n);
    std::vector<double> values(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    std::vector<unsigned char> included(values.size(), 1);

    auto cell = [&](int i, int j) {
        const double t_l = t[static_cast<std::size_t>(i)];
        const double t_m = t[static_cast<std::size_t>(j)];
        const std::size_t idx =
            static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
        values[idx] = gaussian_discord(thermal_covariance(spec.n_bar, t_l, t_m),
                                       MeasuredMode::First);
        if (spec.physical_only && t_l * t_l + t_m * t_m > 1.0) {
            included[idx] = 0;
        }
    };

    if constexpr (Parallel) {
#pragma omp parallel for collapse(2) schedule(static)
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cell(i, j);
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                cell(i, j);
            }
        }
    }
    return SurfaceGrid(spec, std::move(t), std::move(values), std::move(included));
}

/// Round-trips v through its 12-significant-digit rendering so JSON and CSV
/// carry identical values.
double round12(double v) {
    return std::strtod(format_value(v).c_str(), nullptr);
}

nlohmann::ordered_json json_number(double v) {
    return nlohmann::ordered_json(round12(v));
}

} // namespace

SurfaceGrid::SurfaceGrid(const SurfaceSpec& spec, std::vector<double> t,
                         std::vector<double> discord,
                         std::vector<unsigned char> included)
    : spec_(spec), t_(std::move(t)), discord_(std::move(discord)),
      included_(std::move(included)) {}

SurfaceGrid discord_surface(const SurfaceSpec& spec) { return fill_surface<true>(spec); }

SurfaceGrid discord_surface_serial(const SurfaceSpec& spec) { return fill_surface<false>(spec); }

std::string format_value(double v) {
    char buf[40];
    const auto result =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, result.ptr);
}

void write_report(std::ostream& out, const CorrelationReport& report, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "c_value,physical,separable,eta_tilde_minus,discord_measured_on_l,"
               "discord_measured_on_m\n";
        out << format_value(report.c_value) << ','
            << (report.physical ? "true" : "false") << ','
            << (report.separable ? "true" : "false") << ','
            << format_value(report.eta_tilde_minus) << ','
            << format_value(report.discord_measured_on_l) << ','
            << format_value(report.discord_measured_on_m) << '\n';
        return;
    }
    nlohmann::ordered_json j;
    j["c_value"] = json_number(report.c_value);
    j["physical"] = report.physical;
    j["separable"] = report.separable;
    j["eta_tilde_minus"] = json_number(report.eta_tilde_minus);
    j["discord_measured_on_l"] = json_number(report.discord_measured_on_l);
    j["discord_measured_on_m"] = json_number(report.discord_measured_on_m);
    out << j.dump(2) << '\n';
}

void write_region(std::ostream& out, const RegionGrid& grid, OutputFormat format) {
    const int n = grid.resolution();
    if (format == OutputFormat::Csv) {
        out << "gamma_x,gamma_p,class,c_value\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const RegionCell& cell = grid.at(i, j);
                out << format_value(grid.gamma_x(i)) << ','
                    << format_value(grid.gamma_p(j)) << ','
                    << to_string(cell.state_class) << ','
                    << format_value(cell.c_value) << '\n';
            }
        }
        return;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const RegionCell& cell = grid.at(i, j);
            nlohmann::ordered_json row;
            row["gamma_x"] = json_number(grid.gamma_x(i));
            row["gamma_p"] = json_number(grid.gamma_p(j));
            row["class"] = to_string(cell.state_class);
            row["c_value"] = json_number(cell.c_value); // infinities become null
            rows.push_back(std::move(row));
        }
    }
    out << rows.dump(2) << '\n';
}

void write_surface(std::ostream& out, const SurfaceGrid& grid, OutputFormat format) {
    const int n = grid.resolution();
    if (format == OutputFormat::Csv) {
        out << "t_l,t_m,discord\n";
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (!grid.included(i, j)) {
                    continue;
                }
                out << format_value(grid.t(i)) << ',' << format_value(grid.t(j))
                    << ',' << format_value(grid.discord(i, j)) << '\n';
            }
        }
        return;
    }
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!grid.included(i, j)) {
                continue;
            }
            nlohmann::ordered_json row;
            row["t_l"] = json_number(grid.t(i));
            row["t_m"] = json_number(grid.t(j));
            row["discord"] = json_number(grid.discord(i, j));
            rows.push_back(std::move(row));
        }
    }
    out << rows.dump(2) << '\n';
}

void write_sweep(std::ostream& out, const std::vector<SweepPoint>& rows, OutputFormat format) {
    if (format == OutputFormat::Csv) {
        out << "n_bar,N,mean_discord,std_error\n";
        for (const SweepPoint& row : rows) {
            out << format_value(row.n_bar) << ',' << row.channels << ','
                << format_value(row.mean_discord) << ',';
            if (row.has_std_error) {
                out << format_value(row.std_error);
            }
            out << '\n';
        }
        return;
    }
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepPoint& row : rows) {
        nlohmann::ordered_json j;
        j["n_bar"] = json_number(row.n_bar);
        j["N"] = row.channels;
        j["mean_discord"] = json_number(row.mean_discord);
        if (row.has_std_error) {
            j["std_error"] = json_number(row.std_error);
        } else {
            j["std_error"] = nullptr;
        }
        arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
}

} // namespace qscat
