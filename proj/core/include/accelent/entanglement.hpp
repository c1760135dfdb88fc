#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "accelent/density.hpp"
#include "accelent/ket.hpp"
#include "accelent/layout.hpp"
#include "accelent/linalg.hpp"
#include "accelent/states.hpp"

namespace accelent {

/// Partial-transpose eigenvalues in [-kNegativeEigenvalueThreshold, 0) count
/// as zero when summing the negative spectrum.
inline constexpr double kNegativeEigenvalueThreshold = 1e-12;

/// Party A, party B and the traced remainder; together they partition a layout.
struct Bipartition {
    LabelSet party_a;
    LabelSet party_b;
    LabelSet traced;

    /// Throws LayoutError unless the three sets partition `layout` with
    /// non-empty parties.
    void validate(const SubsystemLayout& layout) const;
};

/// Named reduced systems. With one accelerated mode: Full = ρ_{s,(p,a)},
/// SP = ρ_{s,p}, SA = ρ_{s,a}. With both accelerated: Full = ρ_{(p,a),(p,a)},
/// PP, PA (s particle / ω antiparticle), AP (s antiparticle / ω particle), AA.
enum class ReducedSystem { Full, SP, SA, PP, PA, AP, AA };

/// Systems studied for a scenario, in output column order.
std::span<const ReducedSystem> reduced_systems(Acceleration accelerated);

/// "full", "sp", "sa", "pp", "pa", "ap", "aa".
std::string_view system_key(ReducedSystem system);

/// Display name, e.g. "ρ_{s,(p,a)}".
std::string_view system_symbol(ReducedSystem system, Acceleration accelerated);

/// Label sets of a named system in the canonical layout. Throws DomainError
/// if the system does not exist for the scenario.
Bipartition named_bipartition(Acceleration accelerated, ReducedSystem system);

/// ρ over party_a ∪ party_b with `traced` summed out. Unit trace.
DensityMatrix reduced_density(const Ket& state, const Bipartition& bp);

/// ρ^{T_A}: occupations of the party_a sub-modes swapped between row and
/// column multi-indices.
SparseMatrix partial_transpose(const DensityMatrix& rho, std::span<const SubModeLabel> party_a);

/// Ascending eigenvalues of ρ^{T_A}.
std::vector<double> partial_transpose_spectrum(const DensityMatrix& rho,
                                               std::span<const SubModeLabel> party_a);

/// |Σ λ| over eigenvalues λ < -1e-12 of ρ^{T_A}. Requires unit trace.
double negativity(const DensityMatrix& rho, std::span<const SubModeLabel> party_a);

/// log2(2 N_e + 1).
double log_negativity(const DensityMatrix& rho, std::span<const SubModeLabel> party_a);

/// Logarithmic negativity of a pure state split into party_a and the rest,
/// from its Schmidt coefficients: 2 log2(Σ σ_i).
double pure_state_log_negativity(const Ket& state, std::span<const SubModeLabel> party_a);

/// Dispatches to the Schmidt route when nothing is traced out and to the
/// partial-transpose route otherwise.
double bipartition_log_negativity(const Ket& state, const Bipartition& bp);

/// Closed-form fermionic values. One accelerated: 1, log2(1+cos²r_f),
/// log2(1+sin²r_f). Both: 1, log2(1+cos⁴r_f), log2(1+sin⁴r_f) and
/// log2(1+cos²r_f sin²r_f) for PA and AP.
double closed_form_ln(Acceleration accelerated, ReducedSystem system, double r_f);

}  // namespace accelent
