#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "accelent/bogoliubov.hpp"
#include "accelent/entanglement.hpp"
#include "accelent/states.hpp"

namespace accelent {

enum class ScenarioKind { FermionOne, FermionBoth, ScalarOne, ScalarBoth };

/// "fermion-one", "fermion-both", "scalar-one", "scalar-both".
std::string_view to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario_kind(std::string_view name);

Statistics statistics_of(ScenarioKind kind);
Acceleration acceleration_of(ScenarioKind kind);

/// Environment variable that overrides the worker thread count.
inline constexpr const char* kThreadsEnvVar = "ACCELENT_THREADS";

struct SweepConfig {
    ScenarioKind scenario = ScenarioKind::FermionOne;
    double min = 0.0;
    double max = 1.0;
    std::size_t steps = 101;
    /// Initial bosonic truncation; doubled until results move by < convergence_tol.
    std::size_t cutoff = 30;
    std::size_t cutoff_cap = 128;
    double convergence_tol = 1e-8;
    /// Grid values are μ² and are mapped to r / r_f through the Bogoliubov
    /// coefficients instead of being used as the squeeze directly.
    bool mu2_mode = false;
    double phase = 0.0;
    /// 0 = hardware concurrency. ACCELENT_THREADS takes precedence.
    unsigned threads = 0;

    /// Throws DomainError on an invalid grid or truncation setting.
    void validate() const;
    /// Evenly spaced grid values, endpoints included.
    std::vector<double> grid() const;
};

struct SweepRow {
    /// Grid value (the squeeze, or μ² in mu2 mode).
    double parameter = 0.0;
    /// r or r_f actually used.
    double squeeze = 0.0;
    /// One value per entry of SweepTable::systems.
    std::vector<double> ln;
    /// Closed-form values for fermion scenarios, empty for scalars.
    std::vector<double> closed_form;
    double deficit = 0.0;
    /// Cutoff at which the row was evaluated (0 for fermions).
    std::size_t cutoff = 0;
    bool converged = true;
};

struct SweepTable {
    ScenarioKind scenario = ScenarioKind::FermionOne;
    bool mu2_mode = false;
    std::vector<ReducedSystem> systems;
    std::vector<SweepRow> rows;

    bool all_converged() const;
};

/// Evaluates every named system of the scenario at one squeeze value. For
/// scalar scenarios the cutoff is doubled (capped at cfg.cutoff_cap) until
/// the largest change across systems is below cfg.convergence_tol.
SweepRow evaluate_point(const SweepConfig& cfg, double grid_value);

/// Grid points are evaluated concurrently and assembled in grid order.
SweepTable run_sweep(const SweepConfig& cfg);

/// Worker count after applying ACCELENT_THREADS.
unsigned resolve_thread_count(unsigned requested);

}  // namespace accelent
