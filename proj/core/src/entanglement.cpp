#include "accelent/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "accelent/errors.hpp"
#include "index_split.hpp"

namespace accelent {
namespace {

constexpr SubModeLabel kSP{Mode::S, Species::Particle};
constexpr SubModeLabel kSA{Mode::S, Species::Antiparticle};
constexpr SubModeLabel kWP{Mode::Omega, Species::Particle};
constexpr SubModeLabel kWA{Mode::Omega, Species::Antiparticle};

constexpr std::array kOneSystems{ReducedSystem::Full, ReducedSystem::SP, ReducedSystem::SA};
constexpr std::array kBothSystems{ReducedSystem::Full, ReducedSystem::PP, ReducedSystem::PA,
                                  ReducedSystem::AP, ReducedSystem::AA};

constexpr double kTraceTolerance = 1e-10;

bool belongs(std::span<const SubModeLabel> set, SubModeLabel label) {
    return std::find(set.begin(), set.end(), label) != set.end();
}

[[noreturn]] void invalid_system(ReducedSystem system, Acceleration accelerated) {
    throw DomainError("reduced system '" + std::string(system_key(system)) +
                      "' is not defined when " +
                      (accelerated == Acceleration::One ? "one mode is" : "both modes are") +
                      " accelerated");
}

}  // namespace

void Bipartition::validate(const SubsystemLayout& layout) const {
    if (party_a.empty() || party_b.empty()) {
        throw LayoutError("bipartition parties must be non-empty");
    }
    std::size_t count = 0;
    for (const auto* set : {&party_a, &party_b, &traced}) {
        for (const auto& label : *set) {
            layout.position(label);
            ++count;
        }
    }
    for (const auto& label : party_a) {
        if (belongs(party_b, label) || belongs(traced, label)) {
            throw LayoutError("sub-mode " + to_string(label) + " assigned twice");
        }
    }
    for (const auto& label : party_b) {
        if (belongs(traced, label)) {
            throw LayoutError("sub-mode " + to_string(label) + " assigned twice");
        }
    }
    if (count != layout.size()) {
        throw LayoutError("bipartition does not cover every sub-mode of the layout");
    }
}

std::span<const ReducedSystem> reduced_systems(Acceleration accelerated) {
    if (accelerated == Acceleration::One) return kOneSystems;
    return kBothSystems;
}

std::string_view system_key(ReducedSystem system) {
    switch (system) {
        case ReducedSystem::Full: return "full";
        case ReducedSystem::SP: return "sp";
        case ReducedSystem::SA: return "sa";
        case ReducedSystem::PP: return "pp";
        case ReducedSystem::PA: return "pa";
        case ReducedSystem::AP: return "ap";
        case ReducedSystem::AA: return "aa";
    }
    return "?";
}

std::string_view system_symbol(ReducedSystem system, Acceleration accelerated) {
    switch (system) {
        case ReducedSystem::Full:
            return accelerated == Acceleration::One ? "ρ_{s,(p,a)}" : "ρ_{(p,a),(p,a)}";
        case ReducedSystem::SP: return "ρ_{s,p}";
        case ReducedSystem::SA: return "ρ_{s,a}";
        case ReducedSystem::PP: return "ρ_{p,p}";
        case ReducedSystem::PA: return "ρ_{p,a}";
        case ReducedSystem::AP: return "ρ_{a,p}";
        case ReducedSystem::AA: return "ρ_{a,a}";
    }
    return "?";
}

Bipartition named_bipartition(Acceleration accelerated, ReducedSystem system) {
    if (accelerated == Acceleration::One) {
        switch (system) {
            case ReducedSystem::Full: return {{kSP}, {kWP, kWA}, {}};
            case ReducedSystem::SP: return {{kSP}, {kWP}, {kWA}};
            case ReducedSystem::SA: return {{kSP}, {kWA}, {kWP}};
            default: invalid_system(system, accelerated);
        }
    }
    switch (system) {
        case ReducedSystem::Full: return {{kSP, kSA}, {kWP, kWA}, {}};
        case ReducedSystem::PP: return {{kSP}, {kWP}, {kSA, kWA}};
        case ReducedSystem::PA: return {{kSP}, {kWA}, {kSA, kWP}};
        case ReducedSystem::AP: return {{kSA}, {kWP}, {kSP, kWA}};
        case ReducedSystem::AA: return {{kSA}, {kWA}, {kSP, kWP}};
        default: invalid_system(system, accelerated);
    }
}

DensityMatrix reduced_density(const Ket& state, const Bipartition& bp) {
    bp.validate(state.layout());
    LabelSet keep = bp.party_a;
    keep.insert(keep.end(), bp.party_b.begin(), bp.party_b.end());
    return reduce_pure(state, keep);
}

SparseMatrix partial_transpose(const DensityMatrix& rho, std::span<const SubModeLabel> party_a) {
    const SubsystemLayout& layout = rho.layout();
    std::vector<std::size_t> positions;
    for (const auto& label : party_a) positions.push_back(layout.position(label));

    std::vector<std::size_t> row(layout.size()), col(layout.size());
    std::vector<MatrixEntry> out;
    out.reserve(rho.entries().nonzeros());
    for (const auto& e : rho.entries().entries()) {
        layout.occupations(e.row, row);
        layout.occupations(e.col, col);
        for (std::size_t p : positions) std::swap(row[p], col[p]);
        out.push_back({layout.index(row), layout.index(col), e.value});
    }
    return SparseMatrix(rho.dimension(), rho.dimension(), std::move(out));
}

std::vector<double> partial_transpose_spectrum(const DensityMatrix& rho,
                                               std::span<const SubModeLabel> party_a) {
    return hermitian_eigenvalues(partial_transpose(rho, party_a));
}

double negativity(const DensityMatrix& rho, std::span<const SubModeLabel> party_a) {
    if (std::abs(rho.trace() - 1.0) > kTraceTolerance) {
        throw DomainError("negativity: density matrix must have unit trace, got " +
                          std::to_string(rho.trace()));
    }
    double negative = 0.0;
    for (double lambda : partial_transpose_spectrum(rho, party_a)) {
        if (lambda < -kNegativeEigenvalueThreshold) negative += lambda;
    }
    return std::abs(negative);
}

double log_negativity(const DensityMatrix& rho, std::span<const SubModeLabel> party_a) {
    return std::log2(2.0 * negativity(rho, party_a) + 1.0);
}

double pure_state_log_negativity(const Ket& state, std::span<const SubModeLabel> party_a) {
    if (party_a.empty()) {
        throw LayoutError("pure_state_log_negativity: party A must be non-empty");
    }
    if (std::abs(state.squared_norm() - 1.0) > kTraceTolerance) {
        throw DomainError("pure_state_log_negativity: state must be normalised");
    }
    detail::IndexSplitter splitter(state.layout(), party_a);
    std::vector<MatrixEntry> coefficients;
    coefficients.reserve(state.nonzeros());
    for (const auto& e : state.entries()) {
        const auto [a, b] = splitter.split(e.index);
        coefficients.push_back({a, b, e.amplitude});
    }
    const SparseMatrix schmidt(splitter.kept().total_dimension(),
                               splitter.rest().total_dimension(), std::move(coefficients));
    double sum = 0.0;
    for (double sigma : singular_values(schmidt)) sum += sigma;
    return std::max(0.0, 2.0 * std::log2(sum));
}

double bipartition_log_negativity(const Ket& state, const Bipartition& bp) {
    bp.validate(state.layout());
    if (bp.traced.empty()) return pure_state_log_negativity(state, bp.party_a);
    return log_negativity(reduced_density(state, bp), bp.party_a);
}

double closed_form_ln(Acceleration accelerated, ReducedSystem system, double r_f) {
    if (!std::isfinite(r_f) || r_f < 0.0 || r_f > std::numbers::pi / 2.0) {
        throw DomainError("closed_form_ln: r_f must lie in [0, pi/2]");
    }
    const double c2 = std::cos(r_f) * std::cos(r_f);
    const double s2 = std::sin(r_f) * std::sin(r_f);
    if (accelerated == Acceleration::One) {
        switch (system) {
            case ReducedSystem::Full: return 1.0;
            case ReducedSystem::SP: return std::log2(1.0 + c2);
            case ReducedSystem::SA: return std::log2(1.0 + s2);
            default: invalid_system(system, accelerated);
        }
    }
    switch (system) {
        case ReducedSystem::Full: return 1.0;
        case ReducedSystem::PP: return std::log2(1.0 + c2 * c2);
        case ReducedSystem::AA: return std::log2(1.0 + s2 * s2);
        case ReducedSystem::PA:
        case ReducedSystem::AP: return std::log2(1.0 + c2 * s2);
        default: invalid_system(system, accelerated);
    }
}

}  // namespace accelent
