#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "accelent/bogoliubov.hpp"
#include "accelent/sweep.hpp"

namespace accelent {

/// Shortest round-trip-safe rendering with at most 12 significant digits,
/// locale independent.
std::string format_number(double value);

/// [mu2,] r, ln_<system>..., [cf_<system>...,] deficit, cutoff, converged.
std::vector<std::string> csv_header(const SweepTable& table);

void write_csv(const SweepTable& table, std::ostream& out);

/// Throws IoError if the file cannot be written.
void emit_csv(const SweepTable& table, const std::filesystem::path& path);

struct PlotStyle {
    int width = 760;
    int height = 500;
    std::string title;
};

/// One poly-line per (table, system). Full-bipartition curves are
/// dot-dashed, one-accelerated curves dashed, both-accelerated curves solid.
void write_svg(std::span<const SweepTable> tables, std::ostream& out, const PlotStyle& style = {});

/// No-op for an empty path. Throws IoError if the file cannot be written.
void emit_plot(std::span<const SweepTable> tables, const std::filesystem::path& path,
               const PlotStyle& style = {});

struct ConversionReport {
    Statistics statistics = Statistics::Fermion;
    double mass = 0.0;
    double field = 1.0;
    double mu2 = 0.0;
    double alpha_mag = 1.0;
    double beta_mag = 0.0;
    /// r for scalars, r_f for fermions.
    double squeeze = 0.0;
    /// Gamma-function unitarity residual.
    double residual = 0.0;
};

ConversionReport convert_mu2(double mass, double field, Statistics statistics);

void write_report(const ConversionReport& report, std::ostream& out);

}  // namespace accelent
