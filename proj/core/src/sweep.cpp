#include "accelent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numbers>
#include <string>
#include <thread>

#include "accelent/errors.hpp"

namespace accelent {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
// Slack for user-typed π/2 endpoints such as 1.5707963267949.
constexpr double kEndpointSlack = 1e-12;

std::vector<double> evaluate_systems(const Scenario& scenario, const Ket& state) {
    std::vector<double> ln;
    for (ReducedSystem system : reduced_systems(scenario.accelerated)) {
        ln.push_back(bipartition_log_negativity(state, named_bipartition(scenario.accelerated, system)));
    }
    return ln;
}

double max_change(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

std::string_view to_string(ScenarioKind kind) {
    switch (kind) {
        case ScenarioKind::FermionOne: return "fermion-one";
        case ScenarioKind::FermionBoth: return "fermion-both";
        case ScenarioKind::ScalarOne: return "scalar-one";
        case ScenarioKind::ScalarBoth: return "scalar-both";
    }
    return "?";
}

std::optional<ScenarioKind> parse_scenario_kind(std::string_view name) {
    for (auto kind : {ScenarioKind::FermionOne, ScenarioKind::FermionBoth, ScenarioKind::ScalarOne,
                      ScenarioKind::ScalarBoth}) {
        if (to_string(kind) == name) return kind;
    }
    return std::nullopt;
}

Statistics statistics_of(ScenarioKind kind) {
    return kind == ScenarioKind::FermionOne || kind == ScenarioKind::FermionBoth
               ? Statistics::Fermion
               : Statistics::Boson;
}

Acceleration acceleration_of(ScenarioKind kind) {
    return kind == ScenarioKind::FermionOne || kind == ScenarioKind::ScalarOne ? Acceleration::One
                                                                              : Acceleration::Both;
}

void SweepConfig::validate() const {
    if (!std::isfinite(min) || !std::isfinite(max)) {
        throw DomainError("sweep grid bounds must be finite");
    }
    if (steps < 2) throw DomainError("sweep needs at least 2 steps");
    if (min < 0.0) throw DomainError("sweep minimum must be >= 0");
    if (max < min) throw DomainError("sweep maximum must be >= minimum");
    if (!(convergence_tol > 0.0)) throw DomainError("convergence tolerance must be > 0");
    const bool fermion = statistics_of(scenario) == Statistics::Fermion;
    if (mu2_mode) {
        if (!fermion && min <= 0.0) {
            throw DomainError("scalar mu^2 sweeps need mu^2 > 0 at every grid point");
        }
    } else if (fermion && max > kHalfPi + kEndpointSlack) {
        throw DomainError("fermionic r_f grid must stay within [0, pi/2]");
    }
    if (!fermion) {
        if (cutoff < kMinScalarCutoff) {
            throw DomainError("scalar cutoff must be >= " + std::to_string(kMinScalarCutoff));
        }
        if (cutoff > cutoff_cap) throw DomainError("initial cutoff exceeds the cutoff cap");
    }
    if (!std::isfinite(phase)) throw DomainError("phase must be finite");
}

std::vector<double> SweepConfig::grid() const {
    std::vector<double> g(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        g[i] = min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
    }
    g.back() = max;
    return g;
}

bool SweepTable::all_converged() const {
    return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) { return r.converged; });
}

SweepRow evaluate_point(const SweepConfig& cfg, double grid_value) {
    Scenario scenario;
    scenario.statistics = statistics_of(cfg.scenario);
    scenario.accelerated = acceleration_of(cfg.scenario);
    scenario.phase = cfg.phase;
    const bool fermion = scenario.statistics == Statistics::Fermion;

    SweepRow row;
    row.parameter = grid_value;
    if (cfg.mu2_mode) {
        row.squeeze = fermion ? fermion_coefficients(grid_value).r_f
                              : scalar_coefficients(grid_value).r;
    } else {
        row.squeeze = fermion ? std::min(grid_value, kHalfPi) : grid_value;
    }
    scenario.squeeze = row.squeeze;

    if (fermion) {
        const TruncatedKet state = build_final_state(scenario);
        row.ln = evaluate_systems(scenario, state.ket);
        for (ReducedSystem system : reduced_systems(scenario.accelerated)) {
            row.closed_form.push_back(closed_form_ln(scenario.accelerated, system, row.squeeze));
        }
        row.deficit = state.deficit;
        return row;
    }

    scenario.cutoff = cfg.cutoff;
    TruncatedKet state = build_final_state(scenario);
    std::vector<double> ln = evaluate_systems(scenario, state.ket);
    row.converged = false;
    for (;;) {
        const std::size_t next = std::min(scenario.cutoff * 2, cfg.cutoff_cap);
        if (next <= scenario.cutoff) break;
        scenario.cutoff = next;
        state = build_final_state(scenario);
        std::vector<double> refined = evaluate_systems(scenario, state.ket);
        const double change = max_change(ln, refined);
        ln = std::move(refined);
        if (change < cfg.convergence_tol) {
            row.converged = true;
            break;
        }
    }
    row.ln = std::move(ln);
    row.deficit = state.deficit;
    row.cutoff = scenario.cutoff;
    return row;
}

unsigned resolve_thread_count(unsigned requested) {
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

SweepTable run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const std::vector<double> grid = cfg.grid();

    SweepTable table;
    table.scenario = cfg.scenario;
    table.mu2_mode = cfg.mu2_mode;
    const auto systems = reduced_systems(acceleration_of(cfg.scenario));
    table.systems.assign(systems.begin(), systems.end());
    table.rows.resize(grid.size());

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < grid.size(); i = next++) {
            try {
                table.rows[i] = evaluate_point(cfg, grid[i]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = grid.size();
            }
        }
    };

    const unsigned workers =
        std::min<unsigned>(resolve_thread_count(cfg.threads), static_cast<unsigned>(grid.size()));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return table;
}

}  // namespace accelent
