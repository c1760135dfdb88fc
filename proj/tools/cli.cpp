#include "cli.hpp"

#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accelent/errors.hpp"
#include "accelent/report.hpp"
#include "accelent/sweep.hpp"

namespace accelent::cli {
namespace {

struct SweepOptions {
    std::string scenario = "fermion-one";
    std::optional<double> min;
    std::optional<double> max;
    std::size_t steps = 101;
    std::size_t cutoff = 30;
    double tol = 1e-8;
    std::string csv;
    std::string svg;
    bool mu2 = false;
    double phase = 0.0;
};

struct ConvertOptions {
    double mass = 0.0;
    double field = 1.0;
    std::string statistics = "fermion";
};

int do_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    const auto kind = parse_scenario_kind(opt.scenario);
    if (!kind) {
        err << "error: unknown scenario '" << opt.scenario << "'\n";
        return kDomainError;
    }
    SweepConfig cfg;
    cfg.scenario = *kind;
    cfg.steps = opt.steps;
    cfg.cutoff = opt.cutoff;
    cfg.convergence_tol = opt.tol;
    cfg.mu2_mode = opt.mu2;
    cfg.phase = opt.phase;
    const bool fermion = statistics_of(*kind) == Statistics::Fermion;
    if (opt.mu2) {
        cfg.min = opt.min.value_or(fermion ? 0.0 : 0.05);
        cfg.max = opt.max.value_or(2.0);
    } else {
        cfg.min = opt.min.value_or(0.0);
        cfg.max = opt.max.value_or(fermion ? std::numbers::pi / 2.0 : 1.2);
    }

    const SweepTable table = run_sweep(cfg);
    if (opt.csv.empty()) {
        write_csv(table, out);
    } else {
        emit_csv(table, opt.csv);
    }
    emit_plot(std::span(&table, 1), opt.svg);

    if (!table.all_converged()) {
        err << "error: cutoff cap reached before convergence (rows marked converged=0)\n";
        return kNotConverged;
    }
    return kSuccess;
}

int do_convert(const ConvertOptions& opt, std::ostream& out, std::ostream& err) {
    Statistics statistics;
    if (opt.statistics == "fermion") {
        statistics = Statistics::Fermion;
    } else if (opt.statistics == "scalar" || opt.statistics == "boson") {
        statistics = Statistics::Boson;
    } else {
        err << "error: unknown statistics '" << opt.statistics << "'\n";
        return kDomainError;
    }
    write_report(convert_mu2(opt.mass, opt.field, statistics), out);
    return kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement of accelerated particle pairs"};
    app.require_subcommand(1);

    SweepOptions sweep_opt;
    auto* sweep = app.add_subcommand("sweep", "Logarithmic negativity over a squeeze grid");
    sweep->add_option("--scenario", sweep_opt.scenario,
                      "fermion-one | fermion-both | scalar-one | scalar-both")
        ->capture_default_str();
    sweep->add_option("--min", sweep_opt.min, "Grid start (r, r_f, or mu^2 with --mu2)");
    sweep->add_option("--max", sweep_opt.max, "Grid end");
    sweep->add_option("--steps", sweep_opt.steps, "Number of grid points")->capture_default_str();
    sweep->add_option("--cutoff", sweep_opt.cutoff, "Initial bosonic truncation")
        ->capture_default_str();
    sweep->add_option("--tol", sweep_opt.tol, "Cutoff-doubling convergence tolerance")
        ->capture_default_str();
    sweep->add_option("--csv", sweep_opt.csv, "CSV output path (stdout if omitted)");
    sweep->add_option("--svg", sweep_opt.svg, "SVG plot output path");
    sweep->add_flag("--mu2", sweep_opt.mu2, "Interpret the grid as mu^2");
    sweep->add_option("--phase", sweep_opt.phase, "Fermionic vacuum phase")->capture_default_str();

    ConvertOptions convert_opt;
    auto* convert = app.add_subcommand("convert", "Bogoliubov coefficients from mass and field");
    convert->add_option("--mass", convert_opt.mass, "Particle mass m")->required();
    convert->add_option("--field", convert_opt.field, "Electric field E")->required();
    convert->add_option("--statistics", convert_opt.statistics, "fermion | scalar")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }

    try {
        if (*sweep) return do_sweep(sweep_opt, out, err);
        return do_convert(convert_opt, out, err);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

}  // namespace accelent::cli
